use std::time::Instant;

use rayon::prelude::*;

use super::Report;
use crate::error::Result;
use crate::intertwiner::Intertwiner;
use crate::pbw::PbwEngine;
use crate::presets::{AlgebraId, WordLabel};
use crate::tuple::{fmt_tuple, Weight};

/// Compares the PBW transition coefficients with the intertwiner in the
/// opposite direction, entrywise on every block up to `max_height`, for both
/// source words.
pub fn verify_theorem(id: AlgebraId, max_height: i32) -> Result<Report> {
    let start = Instant::now();
    let engine = PbwEngine::new(id);
    let x = Intertwiner::new(id)?;
    for w in [WordLabel::One, WordLabel::Two] {
        x.solver(w).blocks_up_to(max_height)?;
    }
    let jobs: Vec<(WordLabel, Weight)> = [WordLabel::One, WordLabel::Two]
        .into_iter()
        .flat_map(|w| (0..=max_height).flat_map(move |h| (0..=h).map(move |a| (w, Weight(a, h - a)))))
        .collect();
    let results: Vec<(String, Option<String>)> = jobs
        .par_iter()
        .map(|&(w, weight)| -> Result<(String, Option<String>)> {
            let gamma = engine.transition_block(w, weight)?;
            let phi = x.phi_block(w.other(), weight)?;
            let id_str = format!("{id} gamma{w} block {weight}");
            if gamma.rows != phi.tgt || gamma.cols != phi.src {
                return Ok((id_str, Some("row/column tuples differ".into())));
            }
            for (i, a) in gamma.rows.iter().enumerate() {
                for (j, b) in gamma.cols.iter().enumerate() {
                    let (g, p) = (gamma.divided.get(i, j), phi.divided.get(i, j));
                    if g != p {
                        return Ok((id_str, Some(format!("A={} B={}: gamma={g} phi={p}", fmt_tuple(a), fmt_tuple(b)))));
                    }
                }
            }
            Ok((id_str, None))
        })
        .collect::<Result<_>>()?;
    let mut report = Report::new(format!("theorem {id}"));
    for (c, w) in results {
        report.record(c, w);
    }
    report.sort();
    report.duration = start.elapsed();
    Ok(report)
}
