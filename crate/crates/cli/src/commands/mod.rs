pub mod audit;
pub mod bounds;
pub mod brk;
pub mod construct;
pub mod sample;
