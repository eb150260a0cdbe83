pub mod algebra;
pub mod cli;
pub mod catalog;
pub mod poles;
pub mod verify;
pub mod wdrep;
