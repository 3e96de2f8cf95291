//! q-oscillator Fock spaces and the fundamental representations of the
//! quantized function algebra on their tensor products.

mod op;
mod rep;

use std::collections::BTreeMap;

use crate::coeffs::RationalFunction;
use crate::tuple::Tuple;

pub use op::{FockOp, Modes};
pub use rep::{TensorRep, Xi};

/// A finite combination of occupation kets; `bases[k]` is the exponent `d`
/// of the q-oscillator in slot `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    bases: Vec<u32>,
    terms: BTreeMap<Tuple, RationalFunction>,
}

impl FockVector {
    pub fn zero(bases: &[u32]) -> Self {
        Self { bases: bases.to_vec(), terms: BTreeMap::new() }
    }

    pub fn ket(bases: &[u32], m: &[i32]) -> Self {
        let mut v = Self::zero(bases);
        v.add_term(m.into(), RationalFunction::one());
        v
    }

    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &[i32]) -> RationalFunction {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tuple, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Tuple, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        let v = &self.terms.remove(&m).unwrap_or_default() + &c;
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &RationalFunction) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }
}
