pub mod proj_line;
pub mod scalars;
pub mod series;
pub mod mobius;
pub mod analytic;
pub mod verify;
pub mod cli;
