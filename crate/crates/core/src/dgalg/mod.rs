//! Bigraded semifree commutative dg-algebras over Q: construction, derived
//! quotients, base change, localization, cell cancellation, exact π₀ and
//! degree-truncated homology.

mod cdga;
mod graded;
mod homology;
pub mod linalg;
mod map;
mod module;

pub use cdga::{make_cdga, SemifreeCDGA};
pub use homology::{homology_table, weight_piece, HomologyTable, WeightPiece};
pub use map::DgMap;
pub use module::{sym_algebra, DGModuleSpec};

use crate::polycore::{GroebnerBasis, Ideal, MonomialOrder, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub hdeg: u32,
    pub weight: i64,
    /// Internal degree. `None` means: 1 in homological degree 0, otherwise
    /// the top degree of the differential.
    pub deg: Option<u32>,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, hdeg: u32, weight: i64) -> Self {
        GeneratorSpec {
            name: name.into(),
            hdeg,
            weight,
            deg: None,
        }
    }

    pub fn with_deg(mut self, deg: u32) -> Self {
        self.deg = Some(deg);
        self
    }

    pub fn is_odd(&self) -> bool {
        self.hdeg % 2 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DgError {
    #[error("d² is nonzero on `{generator}`: {residue}")]
    DSquareNonzero { generator: String, residue: String },
    #[error("weight mismatch at `{0}`")]
    WeightMismatch(String),
    #[error("homological degree mismatch at `{0}`")]
    DegreeMismatch(String),
    #[error("`{0}` is not of homological degree 0")]
    NotDegreeZero(String),
    #[error("algebras live over different base rings")]
    BaseMismatch,
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot cancel `{cell}`: {reason}")]
    CellNotCancellable { cell: String, reason: String },
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("cutoff {cutoff} leaves no certified degrees (differentials reach degree {maxdeg})")]
    CutoffTooSmall { cutoff: u32, maxdeg: u32 },
    #[error("slice is infinite-dimensional because of `{0}`")]
    UnboundedSlice(String),
    #[error("generator and differential counts differ")]
    ArityMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// π₀ of a semifree algebra: hdeg-0 variables modulo the images of the
/// hdeg-1 cells, with its reduced degrevlex basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Pi0Presentation {
    ideal: Ideal,
    basis: GroebnerBasis,
}

impl Pi0Presentation {
    pub fn new(ideal: Ideal) -> Self {
        let basis = ideal.groebner(MonomialOrder::DegRevLex);
        Pi0Presentation { ideal, basis }
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis.basis().iter().map(|p| p.to_string()).collect()
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, PolyError> {
        self.basis.contains(&p.to_ring(self.ring())?)
    }

    /// Same ring (by names) and same ideal.
    pub fn same_as(&self, other: &Pi0Presentation) -> bool {
        self.ring() == other.ring() && self.basis == other.basis
    }
}
