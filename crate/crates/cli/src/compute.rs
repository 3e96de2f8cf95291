//! Coefficient tables as flat records.

use std::io::Write;

use clap::ValueEnum;
use qpbw::intertwiner::Intertwiner;
use qpbw::pbw::PbwEngine;
use qpbw::presets::WordLabel;
use qpbw::tuple::{fmt_tuple, Tuple, Weight};
use qpbw::{AlgebraId, Error, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// PBW transition coefficients: `E^in = sum gamma^in_out E^out`.
    #[value(name = "gamma")]
    Gamma,
    /// Intertwiner on plain kets: `Phi |in> = sum Phi^out_in |out>`.
    #[value(name = "phi")]
    Phi,
    /// Checked intertwiner of A2.
    #[value(name = "R")]
    R,
    /// Checked intertwiner of C2.
    #[value(name = "K")]
    K,
    /// Checked intertwiner of G2.
    #[value(name = "F")]
    F,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Gamma => "gamma",
            Kind::Phi => "phi",
            Kind::R => "R",
            Kind::K => "K",
            Kind::F => "F",
        }
    }

    fn checked(self) -> bool {
        matches!(self, Kind::R | Kind::K | Kind::F)
    }

    /// Whether the table exists for the algebra: each checked intertwiner
    /// belongs to one algebra.
    pub fn defined_for(self, algebra: AlgebraId) -> bool {
        !self.checked() || self.name() == algebra.checked_kind()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub algebra: String,
    pub kind: String,
    #[serde(rename = "in")]
    pub input: String,
    #[serde(rename = "out")]
    pub output: String,
    pub coeff: String,
}

/// Which part of a table to emit.
pub enum Selection {
    Column(Tuple),
    Block(Weight),
    UpTo(i32),
}

pub struct Request {
    pub algebra: AlgebraId,
    pub kind: Kind,
    /// Word of the input tuples of `gamma` and `phi`.
    pub source: WordLabel,
    pub selection: Selection,
}

/// `(input, output, coefficient)` triples of one weight block.
type Entries = Vec<(Tuple, Tuple, String)>;

struct Tables {
    kind: Kind,
    source: WordLabel,
    engine: Option<PbwEngine>,
    intertwiner: Option<Intertwiner>,
}

impl Tables {
    fn new(r: &Request) -> Result<Self> {
        assert!(r.kind.defined_for(r.algebra), "kind checked by the caller");
        let engine = (r.kind == Kind::Gamma).then(|| PbwEngine::new(r.algebra));
        let intertwiner = if r.kind == Kind::Gamma { None } else { Some(Intertwiner::new(r.algebra)?) };
        Ok(Self { kind: r.kind, source: r.source, engine, intertwiner })
    }

    fn block(&self, weight: Weight) -> Result<Entries> {
        let mut out = Vec::new();
        match (self.kind, &self.engine, &self.intertwiner) {
            (Kind::Gamma, Some(e), _) => {
                let b = e.transition_block(self.source, weight)?;
                for (i, a) in b.rows.iter().enumerate() {
                    for (j, c) in b.cols.iter().enumerate() {
                        push(&mut out, a, c, b.divided.get(i, j));
                    }
                }
            }
            (Kind::Phi, _, Some(x)) => {
                let b = x.phi_block(self.source, weight)?;
                for (i, c) in b.tgt.iter().enumerate() {
                    for (j, a) in b.src.iter().enumerate() {
                        push(&mut out, a, c, b.divided.get(i, j));
                    }
                }
            }
            (_, _, Some(x)) => {
                let b = x.checked_block(weight)?;
                for (i, o) in b.tuples.iter().enumerate() {
                    for (j, a) in b.tuples.iter().enumerate() {
                        push(&mut out, a, o, b.matrix.get(i, j));
                    }
                }
            }
            _ => unreachable!("tables are built for their kind"),
        }
        Ok(out)
    }
}

/// Weight of the block holding an input tuple.
pub fn column_weight(r: &Request, input: &[i32]) -> Result<Weight> {
    let p = r.algebra.preset();
    if input.len() != p.len() {
        return Err(Error::TupleLength { tuple: input.to_vec(), len: input.len(), expected: p.len() });
    }
    Ok(if r.kind.checked() {
        qpbw::intertwiner::checked_weight(r.algebra, input)
    } else {
        p.weight(r.source, input)
    })
}

fn push(out: &mut Entries, input: &Tuple, output: &Tuple, c: &qpbw::RationalFunction) {
    if !c.is_zero() {
        out.push((input.clone(), output.clone(), c.to_string()));
    }
}

/// Records of a request, ordered by output tuple and then input tuple.
pub fn records(r: &Request) -> Result<Vec<Record>> {
    let t = Tables::new(r)?;
    let mut entries = match &r.selection {
        Selection::Column(input) => {
            let mut e = t.block(column_weight(r, input)?)?;
            e.retain(|(a, _, _)| a == input);
            e
        }
        Selection::Block(w) => t.block(*w)?,
        Selection::UpTo(h) => {
            let mut all = Vec::new();
            for n in 0..=*h {
                for a in 0..=n {
                    all.extend(t.block(Weight(a, n - a))?);
                }
            }
            all
        }
    };
    entries.sort_by(|x, y| (&x.1, &x.0).cmp(&(&y.1, &y.0)));
    Ok(entries
        .into_iter()
        .map(|(a, o, c)| Record {
            algebra: r.algebra.to_string(),
            kind: r.kind.name().to_string(),
            input: fmt_tuple(&a),
            output: fmt_tuple(&o),
            coeff: c,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn write_records(records: &[Record], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if records.is_empty() {
                w.write_record(["algebra", "kind", "in", "out", "coeff"])?;
            }
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
