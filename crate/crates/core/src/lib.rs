pub mod cli;
pub mod coloring;
pub mod fan;
pub mod fixtures;
pub mod graph;
pub mod recolor;
pub mod solver;
pub mod theorems;
pub mod verdict;
