//! LDPC channel coding combined with direct-sequence spread spectrum.
//!
//! A single parity-check matrix `H` drives the whole link: it defines the
//! LDPC code (generator derivation, encoding, sum-product decoding) and, by
//! XOR-ing or complementing some of its columns, the spreading sequence used
//! by both ends of the link. Nothing about the spreading code needs to be
//! transmitted; the receiver rebuilds it from the same `H`.
//!
//! The modules follow the link pipeline:
//!
//! * [`gf2`]: parity-check matrices, alist I/O, generator matrices, encoding,
//!   syndromes, girth and progressive-edge-growth construction.
//! * [`spa`]: the sum-product decoder in the LLR domain.
//! * [`dsss`]: spreading-sequence derivation, spreading and despreading.
//! * [`channel`]: BPSK mapping, AWGN, channel LLRs and the uncoded BER curve.
//! * [`sim`]: the Monte Carlo harness, CSV and plot-data output.
//!
//! Runnable walkthroughs of each capability live under `examples/`.

pub mod bits;
pub mod channel;
pub mod dsss;
pub mod error;
pub mod rng;
pub mod gf2;
pub mod sim;
pub mod spa;

pub use bits::BitBlock;
pub use error::{Error, Result};
pub use gf2::{GeneratorMatrix, Girth, ParityCheckMatrix};
