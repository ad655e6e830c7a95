//! Link polynomials and the entanglement classes they name.
//!
//! A link polynomial over ring variables `a, b, c, ...` records which sets
//! of rings stay jointly linked. The same algebra describes which subsets
//! of qubits in a mixed state share genuine entanglement, so a polynomial
//! can be read off a density matrix ([`entclass`]) or turned into a state
//! recipe ([`synth`]).
//!
//! ```
//! use ringlink::enumerate::CatalogSet;
//! use ringlink::linkpoly::LinkPolynomial;
//!
//! let p = LinkPolynomial::parse("ab+bc+abc")?;
//! assert_eq!(p.reduce().to_string(), "ab+bc");
//!
//! let catalogs = CatalogSet::embedded();
//! assert_eq!(catalogs.lookup(&p.reduce())?.to_string(), "3^3");
//! # Ok::<(), ringlink::Error>(())
//! ```

pub mod emit;
pub mod entclass;
pub mod enumerate;
pub mod error;
pub mod linkpoly;
pub mod netplan;
pub mod qla;
pub mod synth;

pub use error::{Error, Result};
