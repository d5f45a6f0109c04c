//! Multimodal feature extraction and classification toolkit for detecting
//! misinformation in health-related videos.
//!
//! The pipeline goes: manifest-driven corpus ingestion ([`corpus`]), rule-based
//! text annotation ([`text`]), per-modality feature blocks ([`features`],
//! [`acoustic`]), per-sample L2 normalization and early fusion ([`fusion`]),
//! a from-scratch dual coordinate-descent linear SVM ([`svm`]), and stratified
//! k-fold ablation evaluation ([`eval`]).

pub mod acoustic;
pub mod corpus;
pub mod eval;
pub mod features;
pub mod fetch;
pub mod fusion;
pub mod pipeline;
pub mod svm;
pub mod synth;
pub mod text;
