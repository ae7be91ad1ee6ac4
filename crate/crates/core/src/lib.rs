pub mod cli;
pub mod colorer;
pub mod coloring;
pub mod fuzz;
pub mod gen;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod oracle;
