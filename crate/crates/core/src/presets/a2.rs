use super::rules::{qi, qp, Collect, RuleTerms};
use super::{osc, tpoly, Osc, PiEntry, SigmaDef, Side, WordExpr};
use crate::coeffs::{LaurentPoly, RationalFunction};

pub(super) fn root_vectors() -> Vec<WordExpr> {
    let e1 = WordExpr::letter(1);
    let e2 = WordExpr::letter(2);
    let b2 = WordExpr::q_commutator(&e1, &e2, &RationalFunction::q_pow(1));
    vec![e2, b2, e1]
}

pub(super) fn mul_rule(letter: u8, side: Side, t: &[i32]) -> RuleTerms {
    let (a, b, c) = (t[0], t[1], t[2]);
    let mut out = Collect::new(t);
    match (side, letter) {
        (Side::Right, 1) => out.push_poly(LaurentPoly::one(), &[0, 0, 1]),
        (Side::Right, 2) => {
            out.push_poly(qp(c - b), &[1, 0, 0]);
            out.push_poly(qi(c, 1), &[0, 1, -1]);
        }
        (Side::Left, 1) => {
            out.push_poly(qp(a - b), &[0, 0, 1]);
            out.push_poly(qi(a, 1), &[-1, 1, 0]);
        }
        (Side::Left, 2) => out.push_poly(LaurentPoly::one(), &[1, 0, 0]),
        _ => panic!("letter {letter}"),
    }
    out.out
}

pub(super) fn sigma() -> [SigmaDef; 2] {
    let one = LaurentPoly::one;
    let mq = || -qp(1);
    [
        SigmaDef {
            sigma: tpoly(&[(one(), &[(1, 3)])]),
            sigma_e: tpoly(&[(one(), &[(2, 3)])]),
        },
        SigmaDef {
            sigma: tpoly(&[(one(), &[(1, 2), (2, 3)]), (mq(), &[(2, 2), (1, 3)])]),
            sigma_e: tpoly(&[(one(), &[(1, 2), (3, 3)]), (mq(), &[(3, 2), (1, 3)])]),
        },
    ]
}

/// The 2x2 oscillator block `[[a-, k], [-q_i k, a+]]` with `q_i = q^d`.
pub(super) fn osc_block(d: i32) -> [[PiEntry; 2]; 2] {
    let one = LaurentPoly::one;
    [
        [osc(one(), &[Osc::Lower]), osc(one(), &[Osc::K])],
        [osc(-qp(d), &[Osc::K]), osc(one(), &[Osc::Raise])],
    ]
}

pub(super) fn identity() -> PiEntry {
    osc(LaurentPoly::one(), &[])
}

/// An `n x n` matrix of zeros.
pub(super) fn zeros(n: usize) -> Vec<Vec<PiEntry>> {
    vec![vec![Vec::new(); n]; n]
}

/// Places a 2x2 block with its top-left corner at `(r, r)` (0-based).
pub(super) fn place(m: &mut [Vec<PiEntry>], r: usize, blk: [[PiEntry; 2]; 2]) {
    for (i, row) in blk.into_iter().enumerate() {
        for (j, e) in row.into_iter().enumerate() {
            m[r + i][r + j] = e;
        }
    }
}

pub(super) fn pi() -> [Vec<Vec<PiEntry>>; 2] {
    let mut p1 = zeros(3);
    place(&mut p1, 0, osc_block(1));
    p1[2][2] = identity();
    let mut p2 = zeros(3);
    p2[0][0] = identity();
    place(&mut p2, 1, osc_block(1));
    [p1, p2]
}
