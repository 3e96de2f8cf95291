//! Published example columns of the checked intertwiners, expanded.

use std::time::Instant;

use super::Report;
use crate::error::Result;
use crate::intertwiner::Intertwiner;
use crate::presets::AlgebraId;
use crate::tuple::fmt_tuple;

pub struct GoldenColumn {
    pub algebra: AlgebraId,
    pub input: &'static [i32],
    /// Every nonzero entry of the column, by output tuple.
    pub entries: &'static [(&'static [i32], &'static str)],
}

const R_314: &[(&[i32], &str)] = &[
    (&[0, 4, 1], "-q^2 + q^6 + q^8 + q^10 - q^12 - q^14 - q^16 + q^20"),
    (&[1, 3, 2], "1 - q^4 - 2q^6 - 2q^8 + 2q^12 + 3q^14 + 2q^16 - q^20 - q^22 - q^24"),
    (&[2, 2, 3], "q^2 + q^4 + q^6 - q^8 - 2q^10 - 3q^12 - 2q^14 + q^18 + 2q^20 + q^22 + q^24"),
    (&[3, 1, 4], "q^6 + q^8 + q^10 - q^14 - q^16 - q^18 - q^20"),
    (&[4, 0, 5], "q^12"),
];

const K_2110: &[(&[i32], &str)] = &[
    (&[1, 3, 0, 0], "q^8 - q^16"),
    (&[2, 1, 1, 0], "-q^4 + q^12 - q^18"),
    (&[2, 2, 0, 1], "-q^6 + q^14 + q^16 + q^18"),
    (&[3, 0, 1, 1], "1 - q^8 + q^14"),
    (&[3, 1, 0, 2], "-q^10 - q^12 - q^14"),
    (&[4, 0, 0, 3], "q^4"),
];

const F_010101: &[(&[i32], &str)] = &[
    (&[0, 0, 0, 2, 0, 0], "q^4 - 2q^6 + q^12"),
    (&[0, 0, 1, 0, 0, 1], "-q + 2q^3 - q^7 - q^9 + q^13"),
    (&[0, 1, 0, 0, 1, 0], "-q + 2q^3 - q^7 - q^9 + q^13"),
    (&[0, 1, 0, 1, 0, 1], "1 - 2q^2 + 2q^6 + 3q^8 - 2q^12 - 2q^14 - q^16"),
    (&[0, 2, 0, 0, 0, 2], "-2q^4 + 2q^10 + q^12 + q^14"),
    (&[1, 0, 0, 0, 1, 1], "-q^3 + q^5 + q^9 - q^13"),
    (&[1, 0, 0, 1, 0, 2], "q - q^3 - q^5 - q^7 + q^11 + q^13 + q^15"),
    (&[1, 1, 0, 0, 0, 3], "q - q^7 - q^9 - q^11 - q^13"),
    (&[2, 0, 0, 0, 0, 4], "q^4"),
];

pub fn golden_columns() -> Vec<GoldenColumn> {
    vec![
        GoldenColumn { algebra: AlgebraId::A2, input: &[3, 1, 4], entries: R_314 },
        GoldenColumn { algebra: AlgebraId::C2, input: &[2, 1, 1, 0], entries: K_2110 },
        GoldenColumn { algebra: AlgebraId::G2, input: &[0, 1, 0, 1, 0, 1], entries: F_010101 },
    ]
}

/// Compares the example columns entry by entry in canonical form.
pub fn verify_golden(id: AlgebraId) -> Result<Report> {
    let start = Instant::now();
    let x = Intertwiner::new(id)?;
    let mut report = Report::new(format!("golden {id}"));
    for g in golden_columns().into_iter().filter(|g| g.algebra == id) {
        let col = x.checked_column(g.input)?;
        let got: Vec<(Vec<i32>, String)> = col.iter().map(|(t, c)| (t.to_vec(), c.to_string())).collect();
        let want: Vec<(Vec<i32>, String)> = g.entries.iter().map(|(t, c)| (t.to_vec(), c.to_string())).collect();
        let witness = (got != want).then(|| {
            let diff: Vec<String> = want
                .iter()
                .filter(|w| !got.contains(w))
                .map(|(t, c)| format!("expected {} -> {c}", fmt_tuple(t)))
                .chain(got.iter().filter(|w| !want.contains(w)).map(|(t, c)| format!("got {} -> {c}", fmt_tuple(t))))
                .collect();
            diff.join("; ")
        });
        report.record(format!("{} column {}", id.checked_kind(), fmt_tuple(g.input)), witness);
    }
    report.duration = start.elapsed();
    Ok(report)
}
