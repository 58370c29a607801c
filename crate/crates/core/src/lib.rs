pub mod error;
pub mod kl;
pub mod kostant;
pub mod length;
pub mod partition;
pub mod poly;
pub mod roots;
pub mod weight;
pub mod weyl;
pub mod demazure;
pub mod crystal;
pub mod harness;
pub mod cli;
