pub mod compare;
pub mod eval;
pub mod verify;

/// Process exit codes: 0 success, 1 config validation, 2 grid too coarse,
/// 3 verification/comparison failure.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_GRID: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
