//! Valuative semirings of toric arrangements: exact linear algebra, the
//! `N̄^r` semiring, scrawl families, conductors, gap sequences and Severi
//! dimension bounds.

pub mod arrangement;
pub mod exact;
pub mod matroid;
pub mod oracle;
pub mod polynomial;
pub mod report;
pub mod semiring;
pub mod severi;
pub mod tropical;
