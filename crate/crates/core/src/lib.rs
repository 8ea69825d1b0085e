//! Spherical point-in-polygon by reduction to a planar winding number.
//!
//! A query point `Q` is classified as on the boundary, inside or outside a
//! spherical polygon whose boundary never meets its own antipodal image
//! (a *BAE* polygon; every polygon inside an open hemisphere qualifies).
//! Two reductions map the problem to "where is the origin relative to a
//! planar polygon":
//!
//! * [`rotation`] rotates `Q` to the north pole and drops `z`;
//! * [`shearing`] shears the `±Q` axis onto a coordinate axis and drops that
//!   coordinate.
//!
//! Both hand the projected polygon to [`planar::classify_origin`]. When the
//! projection passes through the origin, `Q` or `-Q` lies on a side, and the
//! chord midpoint of that side says which. [`oracle`] holds slower,
//! independent paths used for verification.
//!
//! ```
//! use spip::sphere::{SphericalAngles, SphericalPolygon, UnitVector3};
//! use spip::{rotation, shearing, Classification};
//!
//! let at = |t: f64, p: f64| UnitVector3::from_angles(SphericalAngles::new(t, p).unwrap());
//! let cap = SphericalPolygon::new(vec![at(0.3, 0.0), at(0.3, 2.1), at(0.3, 4.2)]).unwrap();
//!
//! let q = SphericalAngles::new(0.0, 0.0).unwrap();
//! assert_eq!(rotation::classify(&cap, q, 1e-12).unwrap(), Classification::Interior { wn: 1 });
//! assert_eq!(
//!     shearing::classify(&cap, UnitVector3::NORTH, 1e-12).unwrap(),
//!     Classification::Interior { wn: 1 }
//! );
//! ```

pub mod classification;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod planar;
pub mod rotation;
pub mod shearing;
pub mod sphere;

pub use classification::{Classification, Outcome};
pub use error::{Error, Result};
