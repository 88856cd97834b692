//! Exact two-variable hypergeometric terms and the rational functions their
//! shift ratios reduce to.

mod domain;
mod hyper;
mod linear;
mod poly;
mod ratfn;

pub use domain::Domain;
pub use hyper::HyperTerm;
pub use linear::LinearForm;
pub use poly::Polynomial;
pub use ratfn::RationalFunction;
