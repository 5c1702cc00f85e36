//! Admission control for eMBB users coexisting with URLLC users in the
//! downlink of a single-cell MISO system.
//!
//! The library maximizes the number of admitted eMBB users subject to
//! per-user rate targets, URLLC reliability/latency guarantees expressed
//! through finite-blocklength rates and effective bandwidth, and shared
//! power/bandwidth budgets. The nonconvex admission problem is relaxed via
//! per-user slacks with a reweighted sparsity surrogate and solved by
//! sequential convex programming; each convex subproblem is handled by a
//! self-contained logarithmic-barrier interior-point method.
//!
//! Module map:
//! - [`model`] — domain types, units, parameter validation
//! - [`channel`] — seeded topology and MISO channel generation
//! - [`qos`] — SINR/SNR, rate, effective-bandwidth and threshold math
//! - [`linearize`] — first-order surrogates and their gradients
//! - [`subsolver`] — the convex inner problem and the barrier engine
//! - [`admission`] — the outer SCP loop
//! - [`oracle`] — exhaustive-search baseline over eMBB subsets
//! - [`harness`] — experiment engine and CSV emission

pub mod admission;
pub mod channel;
pub mod cvec;
pub mod harness;
pub mod linearize;
pub mod model;
pub mod oracle;
pub mod qos;
pub mod subsolver;

pub use admission::{count_admitted, initialize, run};
pub use model::{AdmissionResult, Scenario, SolutionPoint, SplitMode, SystemConfig};
