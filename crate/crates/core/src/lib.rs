//! Exact multivariate free probability over commutative unital rings.
//!
//! Everything is generic over the coefficient type [`Coeff`]; the aliases below
//! fix it to exact rationals or to residues mod p.

pub mod boxconv;
pub mod error;
pub mod hopf;
pub mod io;
pub mod ncpart;
pub mod oracle;
pub mod probmodel;
pub mod rep;
pub mod ring;
pub mod series;
pub mod verify;
pub mod wittlog;

pub use error::{Error, Result};
pub use ring::{Coeff, ModP, Rational, RingDescriptor};
pub use series::{TruncSeries, Word};

pub type QSeries = TruncSeries<Rational>;
pub type ModPSeries = TruncSeries<ModP>;
pub type QDistribution = probmodel::JointDistribution<Rational>;
pub type ModPDistribution = probmodel::JointDistribution<ModP>;
pub type QLaw = wittlog::OneDimLaw<Rational>;
pub type QMatrix = rep::RepMatrix<Rational>;
