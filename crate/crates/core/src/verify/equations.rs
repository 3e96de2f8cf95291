//! The tetrahedron and 3D reflection equations for the checked intertwiners,
//! applied to basis kets of the multi-mode Fock space.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::Report;
use crate::coeffs::{RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::intertwiner::Intertwiner;
use crate::presets::AlgebraId;
use crate::tuple::{cube, fmt_tuple, Tuple, Weight};

/// Values of `q` substituted in sampled mode.
pub const SAMPLE_POINTS: [(i64, i64); 3] = [(1, 3), (2, 5), (-1, 2)];

/// Substitutes used in place of a sample point at which some coefficient has
/// a pole.
const RESERVE_POINTS: [(i64, i64); 4] = [(3, 7), (-2, 7), (4, 9), (5, 11)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Coefficients stay in `Q(q)`.
    Exact,
    /// Coefficients are evaluated at each of [`SAMPLE_POINTS`].
    Sampled,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "sampled" => Ok(Mode::Sampled),
            _ => Err(Error::Mismatch(format!("unknown mode `{s}` (expected exact or sampled)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    R,
    K,
}

impl Kind {
    fn algebra(self) -> AlgebraId {
        match self {
            Kind::R => AlgebraId::A2,
            Kind::K => AlgebraId::C2,
        }
    }

    /// Oscillator base `d` of each slot the operator acts on.
    fn bases(self) -> &'static [u32] {
        match self {
            Kind::R => &[1, 1, 1],
            Kind::K => &[2, 1, 2, 1],
        }
    }
}

/// An operator placed on 1-based tensor slots.
#[derive(Clone, Copy, Debug)]
struct Factor {
    kind: Kind,
    slots: &'static [usize],
}

const fn r(slots: &'static [usize]) -> Factor {
    Factor { kind: Kind::R, slots }
}

const fn k(slots: &'static [usize]) -> Factor {
    Factor { kind: Kind::K, slots }
}

struct Equation {
    name: &'static str,
    modes: usize,
    /// Products as written; the rightmost factor acts first.
    lhs: &'static [Factor],
    rhs: &'static [Factor],
}

const TETRAHEDRON: Equation = Equation {
    name: "R356 R246 R145 R123 = R123 R145 R246 R356",
    modes: 6,
    lhs: &[r(&[3, 5, 6]), r(&[2, 4, 6]), r(&[1, 4, 5]), r(&[1, 2, 3])],
    rhs: &[r(&[1, 2, 3]), r(&[1, 4, 5]), r(&[2, 4, 6]), r(&[3, 5, 6])],
};

const REFLECTION_3D: Equation = Equation {
    name: "R456 R489 K3579 R269 R258 K1678 K1234 = K1234 K1678 R258 R269 K3579 R489 R456",
    modes: 9,
    lhs: &[
        r(&[4, 5, 6]),
        r(&[4, 8, 9]),
        k(&[3, 5, 7, 9]),
        r(&[2, 6, 9]),
        r(&[2, 5, 8]),
        k(&[1, 6, 7, 8]),
        k(&[1, 2, 3, 4]),
    ],
    rhs: &[
        k(&[1, 2, 3, 4]),
        k(&[1, 6, 7, 8]),
        r(&[2, 5, 8]),
        r(&[2, 6, 9]),
        k(&[3, 5, 7, 9]),
        r(&[4, 8, 9]),
        r(&[4, 5, 6]),
    ],
};

/// An assignment of oscillator bases to tensor slots under which every
/// operator of an equation acts on slots of the matching base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotTyping {
    /// `d` per slot: the slot carries the `q^d`-oscillator.
    pub bases: Vec<u32>,
}

impl fmt::Display for SlotTyping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bases.iter().map(|d| if *d == 1 { "q".into() } else { format!("q^{d}") }).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl SlotTyping {
    /// All slot assignments consistent with the operators of an equation.
    fn infer(eq: &Equation) -> Result<Vec<SlotTyping>> {
        let mut fixed: Vec<Option<u32>> = vec![None; eq.modes];
        for f in eq.lhs.iter().chain(eq.rhs) {
            for (&slot, &d) in f.slots.iter().zip(f.kind.bases()) {
                match fixed[slot - 1] {
                    Some(e) if e != d => {
                        return Err(Error::SlotTyping(format!("slot {slot} needs q^{e} and q^{d} in {}", eq.name)))
                    }
                    _ => fixed[slot - 1] = Some(d),
                }
            }
        }
        // A slot no operator touches takes any base; list both.
        let mut out = vec![Vec::new()];
        for b in fixed {
            let options = match b {
                Some(d) => vec![d],
                None => vec![1, 2],
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    options.iter().map(move |&d| {
                        let mut p = prefix.clone();
                        p.push(d);
                        p
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|bases| SlotTyping { bases }).collect())
    }
}

type Column<S> = Vec<(Tuple, S)>;
type Columns<S> = Arc<HashMap<Tuple, Column<S>>>;

/// Columns of a checked table with coefficients converted to the scalar
/// type, cached per weight block.
struct Table<'a, S> {
    source: &'a Intertwiner,
    convert: &'a (dyn Fn(&RationalFunction) -> Result<S> + Sync),
    cache: RwLock<HashMap<Weight, Columns<S>>>,
}

impl<'a, S: Scalar> Table<'a, S> {
    fn new(source: &'a Intertwiner, convert: &'a (dyn Fn(&RationalFunction) -> Result<S> + Sync)) -> Self {
        Self { source, convert, cache: RwLock::new(HashMap::new()) }
    }

    fn block(&self, weight: Weight) -> Result<Columns<S>> {
        if let Some(b) = self.cache.read().unwrap().get(&weight) {
            return Ok(b.clone());
        }
        let checked = self.source.checked_block(weight)?;
        let mut cols = HashMap::new();
        for input in &checked.tuples {
            let col = checked
                .column(input)
                .into_iter()
                .map(|(t, c)| Ok((t, (self.convert)(&c)?)))
                .collect::<Result<Column<S>>>()?;
            cols.insert(input.clone(), col);
        }
        let b = Arc::new(cols);
        self.cache.write().unwrap().insert(weight, b.clone());
        Ok(b)
    }
}

type Vector<S> = BTreeMap<Vec<i32>, S>;

struct Evaluator<'a, S> {
    r: Table<'a, S>,
    k: Table<'a, S>,
}

impl<S: Scalar> Evaluator<'_, S> {
    fn apply(&self, f: &Factor, v: &Vector<S>) -> Result<Vector<S>> {
        let table = match f.kind {
            Kind::R => &self.r,
            Kind::K => &self.k,
        };
        let mut out: Vector<S> = BTreeMap::new();
        for (ket, c) in v {
            let input: Tuple = f.slots.iter().map(|&s| ket[s - 1]).collect();
            let block = table.block(table.source.checked_weight(&input))?;
            let Some(col) = block.get(&input) else { continue };
            for (o, x) in col {
                let mut next = ket.clone();
                for (&s, &a) in f.slots.iter().zip(o.iter()) {
                    next[s - 1] = a;
                }
                let term = c.mul(x);
                let sum = match out.remove(&next) {
                    Some(prev) => prev.add(&term),
                    None => term,
                };
                if !sum.is_zero() {
                    out.insert(next, sum);
                }
            }
        }
        Ok(out)
    }

    fn product(&self, factors: &[Factor], ket: &[i32]) -> Result<Vector<S>> {
        let mut v: Vector<S> = BTreeMap::new();
        v.insert(ket.to_vec(), S::one());
        for f in factors.iter().rev() {
            v = self.apply(f, &v)?;
        }
        Ok(v)
    }
}

fn show<S: Scalar>(v: &Vector<S>) -> String {
    let parts: Vec<String> = v.iter().take(4).map(|(t, c)| format!("[{}]: {c}", fmt_tuple(t))).collect();
    let more = if v.len() > 4 { format!(", ... ({} terms)", v.len()) } else { String::new() };
    format!("{{{}{more}}}", parts.join(", "))
}

/// First ket on which the two sides differ, with both images.
fn first_failure<S: Scalar>(eval: &Evaluator<'_, S>, eq: &Equation, kets: &[Tuple]) -> Result<Option<String>> {
    let found = kets
        .par_iter()
        .map(|ket| -> Result<Option<String>> {
            let lhs = eval.product(eq.lhs, ket)?;
            let rhs = eval.product(eq.rhs, ket)?;
            Ok((lhs != rhs).then(|| format!("ket {}: lhs {} rhs {}", fmt_tuple(ket), show(&lhs), show(&rhs))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found.into_iter().flatten().next())
}

fn rat(p: (i64, i64)) -> BigRational {
    BigRational::new(BigInt::from(p.0), BigInt::from(p.1))
}

fn run(eq: &Equation, max_occ: i32, mode: Mode, r: &Intertwiner, k: &Intertwiner, report: &mut Report) -> Result<()> {
    let kets = cube(eq.modes, max_occ);
    match mode {
        Mode::Exact => {
            let convert = |c: &RationalFunction| Ok(c.clone());
            let eval = Evaluator { r: Table::new(r, &convert), k: Table::new(k, &convert) };
            let w = first_failure(&eval, eq, &kets)?;
            report.record(format!("exact, occupations <= {max_occ} ({} kets)", kets.len()), w);
        }
        Mode::Sampled => {
            let mut reserve = RESERVE_POINTS.iter();
            for &point in &SAMPLE_POINTS {
                let mut point = point;
                loop {
                    let q0 = rat(point);
                    let convert = |c: &RationalFunction| c.eval_at(&q0);
                    let eval = Evaluator { r: Table::new(r, &convert), k: Table::new(k, &convert) };
                    match first_failure(&eval, eq, &kets) {
                        Ok(w) => {
                            report.record(format!("q = {q0}, occupations <= {max_occ} ({} kets)", kets.len()), w);
                            break;
                        }
                        Err(Error::Pole(_)) => {
                            let Some(&next) = reserve.next() else {
                                return Err(Error::Pole(q0.to_string()));
                            };
                            report.note(format!("q = {q0} is a pole of some coefficient; using q = {}", rat(next)));
                            point = next;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(())
}

/// `R356 R246 R145 R123 = R123 R145 R246 R356` on every 6-mode ket with
/// occupations at most `max_occ`.
pub fn verify_tetrahedron(max_occ: i32, mode: Mode) -> Result<Report> {
    let start = Instant::now();
    let r = Intertwiner::new(AlgebraId::A2)?;
    let mut report = Report::new(format!("tetrahedron {mode}"));
    report.note(TETRAHEDRON.name);
    run(&TETRAHEDRON, max_occ, mode, &r, &r, &mut report)?;
    report.duration = start.elapsed();
    Ok(report)
}

/// The 3D reflection equation for `R` (A2) and `K` (C2) on every 9-mode ket
/// with occupations at most `max_occ`, under each consistent slot typing.
pub fn verify_reflection_3d(max_occ: i32, mode: Mode) -> Result<Report> {
    let start = Instant::now();
    let typings = SlotTyping::infer(&REFLECTION_3D)?;
    let r = Intertwiner::new(Kind::R.algebra())?;
    let k = Intertwiner::new(Kind::K.algebra())?;
    let mut report = Report::new(format!("3d reflection {mode}"));
    report.note(REFLECTION_3D.name);
    for t in &typings {
        report.note(format!("slot bases {t}"));
    }
    // The operators only read occupation numbers, so one run covers every
    // consistent typing.
    run(&REFLECTION_3D, max_occ, mode, &r, &k, &mut report)?;
    report.duration = start.elapsed();
    Ok(report)
}

/// Slot bases of the 3D reflection equation implied by the operator types.
pub fn reflection_slot_typing() -> Result<Vec<SlotTyping>> {
    SlotTyping::infer(&REFLECTION_3D)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_typing_is_unique() {
        let t = reflection_slot_typing().unwrap();
        assert_eq!(t, vec![SlotTyping { bases: vec![2, 1, 2, 1, 1, 1, 2, 1, 1] }]);
        assert_eq!(t[0].to_string(), "(q^2, q, q^2, q, q, q, q^2, q, q)");
    }

    #[test]
    fn contradiction_is_reported() {
        const CLASH: Equation = Equation { name: "K1234 = R123", modes: 4, lhs: &[k(&[1, 2, 3, 4])], rhs: &[r(&[1, 2, 3])] };
        let eq = CLASH;
        assert!(matches!(SlotTyping::infer(&eq), Err(Error::SlotTyping(_))));
    }

    #[test]
    fn reflection_exact_on_single_excitations() {
        let r = Intertwiner::new(AlgebraId::A2).unwrap();
        let k = Intertwiner::new(AlgebraId::C2).unwrap();
        let convert = |c: &RationalFunction| Ok(c.clone());
        let eval = Evaluator { r: Table::new(&r, &convert), k: Table::new(&k, &convert) };
        let kets: Vec<Tuple> = (0..10)
            .map(|slot| (0..9).map(|i| i32::from(i + 1 == slot)).collect())
            .collect();
        assert_eq!(first_failure(&eval, &REFLECTION_3D, &kets).unwrap(), None);
        let vac = eval.product(REFLECTION_3D.lhs, &[0; 9]).unwrap();
        assert_eq!(vac.into_iter().collect::<Vec<_>>(), vec![(vec![0; 9], RationalFunction::one())]);
    }

    #[test]
    fn tetrahedron_exact_small() {
        let rep = verify_tetrahedron(1, Mode::Exact).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
