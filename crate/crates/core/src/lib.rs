//! Spectral and combinatorial checks for distance-regular graphs of diameter
//! four: when is the distance-4 graph strongly regular, and when is the graph
//! antipodal.
//!
//! The direct side ([`structure`]) counts on the graph. The spectral side
//! ([`spectrum`], [`criteria`]) works from the intersection array with exact
//! integer eigenvalues and rigorously isolated irrational ones. [`analysis`]
//! compares the two and [`scan`] enumerates small arrays.

pub mod analysis;
pub mod array;
pub mod criteria;
pub mod distance;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod interval;
pub mod poly;
pub mod root;
pub mod scan;
pub mod spectrum;
pub mod structure;

pub use analysis::{analyze, analyze_with, check_fields, check_report, AnalysisReport, SpectralVerdicts};
pub use array::IntersectionArray;
pub use criteria::{
    condition1, condition2, corollary_bipartite, lemma_antipodal, lemma_sdrg, net_array,
    AntipodalLemma, Condition1, Condition2, Disjunct, LemmaBResult,
};
pub use distance::{distance_graph, distances, is_bipartite, Bipartition, DistanceData};
pub use error::{
    AntipodalError, ArrayError, CriteriaError, DrgError, FamilyError, GraphError, ParseError,
    ScanError, SpectrumError, SrgError,
};
pub use families::{cycle, hadamard_graph, hadamard_matrix_sylvester, hypercube, kneser, SignMatrix};
pub use graph::Graph;
pub use interval::{Interval, Verdict};
pub use root::RealRoot;
pub use scan::{open_question_report, scan, ScanRecord, Tag};
pub use spectrum::{
    eigenvalues, multiplicities, pi_products, quotient_matrix, spectral_inner_product, Precision,
    Spectrum,
};
pub use structure::{antipodal_fibres, intersection_array, srg_params, FibrePartition, SrgParams};
