//! Exact rational geometry for string representations: polyline curves,
//! proper-crossing detection, and the 1-string, order-preserving and
//! outer-string verifiers.

mod error;
pub mod json;
mod point;
mod profile;
mod rep;
mod segment;
pub mod svg;
pub use svg::{emit_svg, SvgOptions};
mod verify;

pub use error::GeomError;
pub use point::{rat, Pt, Rat};
pub use profile::{crossing_profile, CrossingProfile};
pub use rep::{ContourWitness, Curve, StringRep};
pub use segment::{point_on_segment, segment_intersection, SegHit};
pub use verify::{
    order_breaks, verify_1string, verify_order_preserving, verify_outer_string, OuterMode,
};
