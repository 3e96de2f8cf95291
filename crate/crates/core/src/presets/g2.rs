use super::a2::{identity, osc_block, place, zeros};
use super::rules::{br, lp, over_qi, qi, qp, Collect, RuleTerms};
use super::{osc, tpoly, Osc, OscWord, PiEntry, SigmaDef, Side, WordExpr};
use crate::coeffs::{LaurentPoly, RationalFunction};

pub(super) fn root_vectors() -> Vec<WordExpr> {
    let e1 = WordExpr::letter(1);
    let e2 = WordExpr::letter(2);
    let q = RationalFunction::q_pow;
    let b2 = WordExpr::q_commutator(&e1, &e2, &q(3));
    let b4 = WordExpr::q_commutator(&e1, &b2, &q(1)).scale(&over_qi(lp(1), 2));
    let b5 = WordExpr::q_commutator(&e1, &b4, &q(-1)).scale(&over_qi(lp(1), 3));
    let b3 = WordExpr::q_commutator(&b4, &b2, &q(-1)).scale(&over_qi(lp(1), 3));
    vec![e2, b2, b3, b4, b5, e1]
}

pub(super) fn mul_rule(letter: u8, side: Side, t: &[i32]) -> RuleTerms {
    let (a, b, c, d, e, f) = (t[0], t[1], t[2], t[3], t[4], t[5]);
    let q1 = |m| qi(m, 1);
    let q2 = |m| qi(m, 3);
    let mut out = Collect::new(t);
    match (side, letter) {
        (Side::Right, 1) => out.push_poly(LaurentPoly::one(), &[0, 0, 0, 0, 0, 1]),
        (Side::Right, 2) => {
            out.push_poly(-(&(&br(1) * &q2(e)) * &qp(-3 * c - d + 3 * f - 1)), &[0, 1, 0, 1, -1, 0]);
            let x = &(&(&br(1) * &br(1)) * &(&q2(e - 1) * &q2(e))) * &qp(-3 * e + 3 * f + 3);
            out.push(over_qi(x, 3), &[0, 0, 0, 3, -2, 0]);
            let x = &(&br(3) * &(&q1(d - 1) * &q1(d))) * &qp(-3 * c - 2 * d + 3 * e + 3 * f + 1);
            out.push_poly(-x, &[0, 1, 1, -2, 0, 0]);
            out.push_poly(-(&(&br(1) * &q1(d)) * &qp(-6 * c - d + 3 * (e + f))), &[0, 2, 0, -1, 0, 0]);
            out.push_poly(&(&q1(f - 1) * &q1(f)) * &qp(-3 * e + f - 2), &[0, 0, 0, 1, 0, -2]);
            out.push_poly(&(&(&q1(3) * &q1(d)) * &q1(f)) * &qp(2 * f - 2 * d), &[0, 0, 1, -1, 0, -1]);
            out.push_poly(&q1(f) * &qp(-3 * c - d + 2 * f - 2), &[0, 1, 0, 0, 0, -1]);
            out.push_poly(qp(-3 * (b + c - e - f)), &[1, 0, 0, 0, 0, 0]);
            let x = &(&(&br(1) * &br(1)) * &q2(c)) * &qp(3 * (-2 * c + e + f + 1));
            out.push(over_qi(x, 3), &[0, 3, -1, 0, 0, 0]);
            let x = &(&br(3) * &(&(&q1(d - 2) * &q1(d - 1)) * &q1(d))) * &qp(3 * (-d + e + f + 2));
            out.push_poly(-x, &[0, 0, 2, -3, 0, 0]);
            out.push_poly(-(&(&(&br(1) * &q2(e)) * &q1(f)) * &qp(-3 * e + 2 * f)), &[0, 0, 0, 2, -1, -1]);
            let inner = &(&qp(2 * d + 1) * &q1(3)) - &q2(2);
            out.push_poly(-(&(&q2(e) * &qp(-3 * d + 3 * f)) * &inner), &[0, 0, 1, 0, -1, 0]);
            out.push_poly(&(&q1(f - 2) * &q1(f - 1)) * &q1(f), &[0, 0, 0, 0, 1, -3]);
        }
        (Side::Left, 1) => {
            out.push_poly(-(&(&br(1) * &q2(c)) * &qp(3 * a + b - 3 * c + 2)), &[0, 0, -1, 2, 0, 0]);
            out.push_poly(&(&(&q1(3) * &q1(b - 1)) * &q1(b)) * &qp(3 * a - b + 2), &[0, -2, 1, 0, 0, 0]);
            out.push_poly(&(&q1(3) * &q1(d)) * &qp(3 * a + b - 2 * d + 2), &[0, 0, 0, -1, 1, 0]);
            out.push_poly(qp(3 * a + b - d - 3 * e), &[0, 0, 0, 0, 0, 1]);
            out.push_poly(&(&q1(2) * &q1(b)) * &qp(3 * (a - c)), &[0, -1, 0, 1, 0, 0]);
            out.push_poly(q2(a), &[-1, 1, 0, 0, 0, 0]);
        }
        (Side::Left, 2) => out.push_poly(LaurentPoly::one(), &[1, 0, 0, 0, 0, 0]),
        _ => panic!("letter {letter}"),
    }
    out.out
}

pub(super) fn sigma() -> [SigmaDef; 2] {
    let one = LaurentPoly::one;
    let mq = || -qp(1);
    [
        SigmaDef {
            sigma: tpoly(&[(one(), &[(1, 7)])]),
            sigma_e: tpoly(&[(one(), &[(2, 7)])]),
        },
        SigmaDef {
            sigma: tpoly(&[(one(), &[(2, 6), (1, 7)]), (mq(), &[(2, 7), (1, 6)])]),
            sigma_e: tpoly(&[(one(), &[(3, 6), (1, 7)]), (mq(), &[(3, 7), (1, 6)])]),
        },
    ]
}

pub(super) fn pi() -> [Vec<Vec<PiEntry>>; 2] {
    use Osc::{Lower, Raise, K};
    let one = LaurentPoly::one;
    let two = || qi(2, 1);
    let mut p1 = zeros(7);
    place(&mut p1, 0, osc_block(1));
    p1[2][2] = osc(one(), &[Lower, Lower]);
    p1[2][3] = osc(two(), &[K, Lower]);
    p1[2][4] = osc(one(), &[K, K]);
    p1[3][2] = osc(-qp(1), &[Lower, K]);
    p1[3][3] = vec![
        OscWord { coeff: one(), letters: vec![Lower, Raise] },
        OscWord { coeff: -one(), letters: vec![K, K] },
    ];
    p1[3][4] = osc(one(), &[K, Raise]);
    p1[4][2] = osc(qp(2), &[K, K]);
    p1[4][3] = osc(-two(), &[K, Raise]);
    p1[4][4] = osc(one(), &[Raise, Raise]);
    place(&mut p1, 5, osc_block(1));
    let mut p2 = zeros(7);
    p2[0][0] = identity();
    place(&mut p2, 1, osc_block(3));
    p2[3][3] = identity();
    place(&mut p2, 4, osc_block(3));
    p2[6][6] = identity();
    [p1, p2]
}
