//! Exhaustive search of the (s, p, j) grid.

use std::collections::HashSet;

use rayon::prelude::*;

use super::assemble::{build_certificate, GpfCertificate};
use super::nsc_detail_at;
use crate::arguments::x_of_s;
use crate::data::HyperData;
use crate::error::Result;
use crate::exact::rat;

/// Every certified (p, s, j) with 2 <= s <= s_max, 1 <= p <= p_max, ordered
/// by (s, p, j). Multiples of smaller solutions are flagged, not dropped.
pub fn search(s_max: i64, p_max: i64, precision: usize) -> Result<Vec<GpfCertificate>> {
    let xs = (2..=s_max).into_par_iter().map(|s| Ok((s, x_of_s(s)?))).collect::<Result<Vec<_>>>()?;
    let grid: Vec<(i64, i64, i64)> = (2..=s_max).flat_map(|s| (1..=p_max).flat_map(move |p| (0..=s - 2).map(move |j| (s, p, j)))).collect();
    let x_for = |s: i64| &xs[(s - 2) as usize].1;
    let hits = grid
        .par_iter()
        .map(|&(s, p, j)| Ok(nsc_detail_at(p, s, j, s - 2 - j, x_for(s))?.is_none().then_some((s, p, j))))
        .collect::<Result<Vec<_>>>()?;
    let hits: Vec<(i64, i64, i64)> = hits.into_iter().flatten().collect();
    let known: HashSet<(i64, i64, i64)> = hits.iter().copied().collect();
    let mut certs = hits
        .par_iter()
        .map(|&(s, p, j)| {
            let base = (1..=p).find(|d| p % d == 0 && known.contains(&(s, *d, j))).unwrap_or(p);
            let lam = HyperData::boundary(p, p * s, rat(j, s), x_for(s).clone());
            build_certificate(lam, s, j, base, precision)
        })
        .collect::<Result<Vec<_>>>()?;
    certs.sort_by_key(|c| (c.s, c.p(), c.j));
    Ok(certs)
}
