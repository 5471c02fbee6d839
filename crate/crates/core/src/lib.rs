//! End-to-end CTC-based spoken language understanding toolkit.
//!
//! The crate covers the full experimental loop at desk scale: chunked tag
//! codecs and the star-mode target mapping, an exact CTC loss with analytic
//! gradients, a small convolutional/bidirectional-recurrent network with
//! manual backprop, transfer-chain and speaker-adaptive training, n-gram
//! language model estimation with ARPA round-trip, prefix beam search with
//! shallow LM fusion, and concept-level evaluation metrics. A deterministic
//! synthetic corpus generator stands in for real speech corpora.

pub mod corpus;
pub mod ctc;
pub mod decode;
pub mod lm;
pub mod metrics;
pub mod model;
pub mod synthcorpus;
pub mod tagcodec;
pub mod train;
