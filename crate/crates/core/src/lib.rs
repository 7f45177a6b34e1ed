//! Line multigraphs of general hypergraphs, their exact matrices and
//! spectra, collar certificates and power hypergraphs.

pub mod check;
pub mod error;
pub mod families;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod line;
pub mod matrices;
pub mod multigraph;
pub mod power;
pub mod spectra;
pub mod structure;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use line::{line_multigraph, LineMultigraph};
pub use multigraph::Multigraph;
