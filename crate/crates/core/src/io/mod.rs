//! MultiFASTA input and PHYLIP distance-matrix output.

mod fasta;
mod phylip;

pub use fasta::{parse_fasta, write_fasta, AlphabetChoice, ParsedFasta, Sequence};
pub use phylip::{read_phylip, write_phylip, DistanceMatrix, PHYLIP_NAME_WIDTH};
