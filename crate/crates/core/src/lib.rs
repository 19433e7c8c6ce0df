//! Exact machinery for directed topology of concurrent systems.
//!
//! Pospaces are modeled two ways and the two views are kept consistent:
//!
//! * combinatorially, as finite directed cell complexes ([`complex`]) on which
//!   the fundamental category is computed by path enumeration and square
//!   flips ([`fundcat`]), and which can be glued by pushouts ([`glue`]);
//! * geometrically, as rectilinear regions, embedded segment complexes and
//!   branched intervals over exact rationals ([`geom`]), with piecewise-linear
//!   dimaps and dihomotopy-equivalence certificates verified exactly
//!   ([`plmap`], [`cert`]).
//!
//! All verdict-producing arithmetic is exact rational; there is no floating
//! point anywhere in this crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cellgeo;
pub mod cert;
pub mod complex;
pub mod expr;
pub mod fundcat;
pub mod geom;
pub mod glue;
pub mod lp;
pub mod models;
pub mod plmap;
pub mod presets;
pub mod pwa;
pub mod rat;

pub use geom::{compare_points, AxisBox, OrderRelation, Point, RectRegion, RegionClass};
pub use rat::Rat;
