//! Exponent and occupation tuples.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Tuple = SmallVec<[i32; 6]>;

/// A weight `n1 alpha_1 + n2 alpha_2` of the positive root lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(pub i32, pub i32);

impl Weight {
    pub fn height(self) -> i32 {
        self.0 + self.1
    }

    pub fn is_nonnegative(self) -> bool {
        self.0 >= 0 && self.1 >= 0
    }

    /// The weight of the simple root `alpha_node`.
    pub fn simple(node: u8) -> Weight {
        match node {
            1 => Weight(1, 0),
            2 => Weight(0, 1),
            _ => panic!("rank-2 node index {node}"),
        }
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight(self.0 + o.0, self.1 + o.1)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight(self.0 - o.0, self.1 - o.1)
    }
}

impl std::ops::Mul<Weight> for i32 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight(self * w.0, self * w.1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

pub fn reversed(t: &[i32]) -> Tuple {
    t.iter().rev().copied().collect()
}

/// Parses `3,1,4` (spaces allowed) into a tuple of the given length.
pub fn parse_tuple(s: &str, len: usize) -> Result<Tuple> {
    let t = s
        .split(',')
        .map(|x| x.trim().parse::<i32>().ok().filter(|v| *v >= 0))
        .collect::<Option<Tuple>>()
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad tuple `{s}`") })?;
    if t.len() != len {
        return Err(Error::TupleLength { tuple: t.to_vec(), len: t.len(), expected: len });
    }
    Ok(t)
}

pub fn fmt_tuple(t: &[i32]) -> String {
    t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// All tuples whose entries lie in `0..=max`, in lexicographic order.
pub fn cube(len: usize, max: i32) -> Vec<Tuple> {
    let mut out = vec![Tuple::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// All tuples with entry sum at most `max`, in lexicographic order.
pub fn simplex(len: usize, max: i32) -> Vec<Tuple> {
    cube(len, max).into_iter().filter(|t| t.iter().sum::<i32>() <= max).collect()
}
