pub mod bound;
pub mod comb;
pub mod strip2;
pub mod strip3;
pub mod frame;
pub mod ops;
