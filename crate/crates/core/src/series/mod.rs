//! Truncated power series in `T` whose coefficients are symmetric functions,
//! localized at `e1` so that `1/Q(T)` makes sense.

mod loc;
mod named;
mod scalar;
mod symseries;

pub use loc::LocSymFn;
pub use named::{named_series, named_series_str, SeriesName};
pub use scalar::ScalarSeries;
pub use symseries::SymSeries;
