pub mod analyze;
pub mod map;
pub mod verify;
