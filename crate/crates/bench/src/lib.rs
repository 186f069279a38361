//! Inputs shared by the benchmarks in `benches/`.

use gpf_core::certify::{certify, GpfCertificate, Outcome};
use gpf_core::exact::{rat, AlgebraicReal};
use gpf_core::HyperData;

/// The three primitive solutions with small s.
pub fn golden() -> Vec<GpfCertificate> {
    [(1, 3, rat(0, 1)), (1, 3, rat(1, 3)), (2, 4, rat(0, 1))]
        .into_iter()
        .map(|(p, r, a)| match certify(p, r, &a, 256).expect("certify runs") {
            Outcome::Certified(c) => *c,
            Outcome::Refused(why) => panic!("golden case refused: {why}"),
        })
        .collect()
}

/// (p, 0, r; 1/5, 1/2; 1/2), a generic point off the solution set.
pub fn generic(p: i64, r: i64) -> HyperData {
    HyperData::boundary(p, r, rat(1, 5), AlgebraicReal::from_rational(rat(1, 2)))
}
