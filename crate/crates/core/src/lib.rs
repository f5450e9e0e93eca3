//! Exact-arithmetic reductions from line arrangements to generalized
//! transmission graphs of segments and circular sectors.
//!
//! All coordinates are [`Rational`]s; no floating point enters a geometric
//! decision.

pub mod arrangement;
pub mod document;
pub mod dot;
pub mod geometry;
pub mod realize;
pub mod reduce;
pub mod serde_rational;
pub mod svg;
pub mod transmission;
pub mod verify;

pub use arrangement::{
    containing_slab, extract_description, is_simple, validate_description, ArrangementError, Description,
    LineArrangement, Slab, ValidationReport, Violation,
};
pub use document::{load_document, save_document, Document, DocumentError, DocumentKind};
pub use dot::export_dot;
pub use geometry::{
    ArrangementObject, Disk, GeometryError, Line, Point, Rational, RationalRotation, Sector, Segment, Vector,
};
pub use realize::{realize_sectors, realize_segments, RealizeError, SectorRealization, SegmentRealization};
pub use reduce::{reduce_sectors, reduce_segments, ReduceError, SectorFamily, SegmentFamily};
pub use svg::{render_svg, RenderStyle, RenderSubject};
pub use transmission::{graph_diff, transmission_graph, DiffReport, Instance, LabelledDigraph, VertexLabel};
pub use verify::{random_simple_arrangement, round_trip_sectors, round_trip_segments, RandomSpec, RoundTripReport};
