//! Exact verification and construction of averaging algebras, averaging ASI
//! bialgebras, matched pairs, Yang-Baxter solutions, O-operators, Rota-Baxter
//! operators and the perm/pre-Lie structures built from them.
//!
//! Everything works over exact rationals on a fixed basis. Structures are given
//! by structure constants, operators by matrices whose columns are the images
//! of basis vectors.

pub mod actions;
pub mod bialgebra;
pub mod error;
pub mod factorizable;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod tensor;
pub mod ybe;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use report::{AxiomResult, CheckReport, Witness};
pub use scalar::Q;
pub use tensor::{Tensor3, ThreeTensor, TwoTensor};

/// Largest dimension accepted anywhere in the library.
pub const MAX_DIM: usize = 32;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}
