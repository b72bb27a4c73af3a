pub mod words;
pub mod planar;
