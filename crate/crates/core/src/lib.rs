//! Extendability of bipartite graphs through strong connectivity of digraphs and
//! reducibility of (0,1)-matrices.

pub mod certificate;
pub mod connectivity;
pub mod correspondence;
pub mod extendability;
mod flow;
pub mod format;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod matrix;
pub mod search;
