use super::a2::{identity, osc_block, place, zeros};
use super::rules::{br, lp, over_qi, qi, qp, Collect, RuleTerms};
use super::{osc, tpoly, Osc, PiEntry, SigmaDef, Side, WordExpr};
use crate::coeffs::{LaurentPoly, RationalFunction};

pub(super) fn root_vectors() -> Vec<WordExpr> {
    let e1 = WordExpr::letter(1);
    let e2 = WordExpr::letter(2);
    let b2 = WordExpr::q_commutator(&e1, &e2, &RationalFunction::q_pow(2));
    let b3 = WordExpr::q_commutator(&e1, &b2, &RationalFunction::one()).scale(&over_qi(lp(1), 2));
    vec![e2, b2, b3, e1]
}

pub(super) fn mul_rule(letter: u8, side: Side, t: &[i32]) -> RuleTerms {
    let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
    let mut out = Collect::new(t);
    match (side, letter) {
        (Side::Right, 1) => out.push_poly(LaurentPoly::one(), &[0, 0, 0, 1]),
        (Side::Right, 2) => {
            out.push_poly(&qi(d, 1) * &qp(d - 2 * c - 1), &[0, 1, 0, -1]);
            out.push_poly(qp(2 * (d - b)), &[1, 0, 0, 0]);
            let x = &(&br(1) * &qp(2 * d - 2 * c + 1)) * &qi(c, 2);
            out.push(-over_qi(x, 2), &[0, 2, -1, 0]);
            out.push_poly(&qi(d - 1, 1) * &qi(d, 1), &[0, 0, 1, -2]);
        }
        (Side::Left, 1) => {
            out.push_poly(&(&qi(2, 1) * &qi(b, 1)) * &qp(2 * a - b + 1), &[0, -1, 1, 0]);
            out.push_poly(qp(2 * a - 2 * c), &[0, 0, 0, 1]);
            out.push_poly(qi(a, 2), &[-1, 1, 0, 0]);
        }
        (Side::Left, 2) => out.push_poly(LaurentPoly::one(), &[1, 0, 0, 0]),
        _ => panic!("letter {letter}"),
    }
    out.out
}

pub(super) fn sigma() -> [SigmaDef; 2] {
    let one = LaurentPoly::one;
    let mq = || -qp(1);
    [
        SigmaDef {
            sigma: tpoly(&[(one(), &[(1, 4)])]),
            sigma_e: tpoly(&[(one(), &[(2, 4)])]),
        },
        SigmaDef {
            sigma: tpoly(&[(one(), &[(1, 3), (2, 4)]), (mq(), &[(2, 3), (1, 4)])]),
            sigma_e: tpoly(&[(one(), &[(1, 3), (3, 4)]), (mq(), &[(3, 3), (1, 4)])]),
        },
    ]
}

pub(super) fn pi() -> [Vec<Vec<PiEntry>>; 2] {
    let one = LaurentPoly::one;
    let mut p1 = zeros(4);
    place(&mut p1, 0, osc_block(1));
    let flipped: [[PiEntry; 2]; 2] = [
        [osc(one(), &[Osc::Lower]), osc(-one(), &[Osc::K])],
        [osc(qp(1), &[Osc::K]), osc(one(), &[Osc::Raise])],
    ];
    place(&mut p1, 2, flipped);
    let mut p2 = zeros(4);
    p2[0][0] = identity();
    place(&mut p2, 1, osc_block(2));
    p2[3][3] = identity();
    [p1, p2]
}
