pub mod blowup;
pub mod center;
pub mod classical;
pub mod comparisons;
pub mod dgalg;
pub mod infnbhd;
pub mod polycore;
pub mod rees;

/// Umbrella error for operations that cross module boundaries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] polycore::PolyError),
    #[error(transparent)]
    Dg(#[from] dgalg::DgError),
    #[error(transparent)]
    Center(#[from] center::CenterError),
    #[error("the center has no generators")]
    EmptyCenter,
    #[error("chart index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
}
