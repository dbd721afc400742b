//! Grow two-mode (agent x group) networks out of one-mode social networks.
//!
//! Three group-formation models are provided: `teams` (a random maximal
//! clique's members are retained or swapped for newcomers), `clubs` (a clique
//! recruits neighbors subject to a minimum-density rule) and `organizations`
//! (recruitment from a niche in a low-dimensional embedding of the network).
//! Applied repeatedly, each yields a binary membership structure whose
//! statistical character can be checked against degree-preserving null
//! ensembles, and from which the source network can be recovered through a
//! projection backbone.
//!
//! All randomness flows through explicit ChaCha streams: the same seed gives
//! the same networks, the same experiments, the same bytes on disk.

pub mod bipartite;
pub mod blau;
pub mod error;
pub mod eval;
pub mod graph;
pub mod models;
pub mod null;
pub mod seed;

pub use bipartite::{
    count_four_cycles, degrees, project, read_coordinate_list, read_incidence,
    write_coordinate_list, write_incidence, ProjectionMatrix, TwoModeNetwork,
};
pub use blau::{
    embed_classical_mds, sample_niche, sample_niche_with, BlauSpace, NicheSpec,
    RadiusDistribution,
};
pub use error::{Error, Result};
pub use eval::{
    characteristics_csv, characteristics_summary_csv, extract_backbone, recovery_csv,
    run_characteristics_experiment, run_recovery_experiment, similarity, skewness,
    CellSummary, CharacteristicsConfig, CharacteristicsRow, EvalReport, RecoveryConfig,
    RecoveryRow, SimilarityReport,
};
pub use graph::{
    geodesic_distances, geodesic_distances_with, induced_density, karate_club, load_edge_list,
    sample_maximal_clique, watts_strogatz, write_edge_list, CliqueMethod, DisconnectedPolicy,
    DistanceMatrix, OneModeNetwork,
};
pub use models::{
    clubs_group, clubs_group_from_clique, clubs_group_trace, generate_two_mode,
    generate_two_mode_with_stats, organizations_group, organizations_group_trace,
    organizations_recruit, teams_group, teams_group_from_clique, teams_group_trace,
    ClubDecision, ClubsTrace, GenerationStats, Model, ModelConfig, OrganizationsTrace,
    OutsideProbMode, TeamPick, TeamsTrace,
};
pub use null::{
    curveball, default_curveball_iterations, four_cycle_ratio, four_cycle_ratio_with_quantiles,
    NullEnsembleStats,
};
