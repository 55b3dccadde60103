//! Reference single-symbol tables of the Gray maps, in listing order.
//!
//! Words use the CLI text forms: bit strings over 𝔽₂, comma-separated residues otherwise.

/// φ on ℤ₄²: `(x,y)`, Lee weight, image, Hamming weight.
pub const PHI_Z4_SQUARED: [(&str, u64, &str, u64); 16] = [
    ("0,0", 0, "0000", 0),
    ("0,1", 1, "0001", 1),
    ("0,2", 2, "0011", 2),
    ("0,3", 1, "0010", 1),
    ("1,0", 1, "0100", 1),
    ("1,1", 2, "0101", 2),
    ("1,2", 3, "0111", 3),
    ("1,3", 2, "0110", 2),
    ("2,0", 2, "1100", 2),
    ("2,1", 3, "1101", 3),
    ("2,2", 4, "1111", 4),
    ("2,3", 3, "1110", 3),
    ("3,0", 1, "1000", 1),
    ("3,1", 2, "1001", 2),
    ("3,2", 3, "1011", 3),
    ("3,3", 2, "1010", 2),
];

/// φ⁻¹ restricted to RM(1,2).
pub const PHI_INVERSE_RM12: [(&str, &str); 8] = [
    ("0000", "0,0"),
    ("0101", "1,1"),
    ("0011", "0,2"),
    ("0110", "1,3"),
    ("1111", "2,2"),
    ("1010", "3,3"),
    ("1100", "2,0"),
    ("1001", "3,1"),
];

/// ψ on ℤ₈: `u`, homogeneous weight, image in RM(1,2), Hamming weight.
pub const PSI_Z8: [(&str, u64, &str, u64); 8] = [
    ("0", 0, "0000", 0),
    ("1", 2, "0101", 2),
    ("2", 2, "0011", 2),
    ("3", 2, "0110", 2),
    ("4", 4, "1111", 4),
    ("5", 2, "1010", 2),
    ("6", 2, "1100", 2),
    ("7", 2, "1001", 2),
];

/// φ⁻¹ψ on ℤ₈: `u`, homogeneous weight, image in ℤ₄², Lee weight.
pub const COMPOSED_Z8: [(&str, u64, &str, u64); 8] = [
    ("0", 0, "0,0", 0),
    ("1", 2, "1,1", 2),
    ("2", 2, "0,2", 2),
    ("3", 2, "1,3", 2),
    ("4", 4, "2,2", 4),
    ("5", 2, "3,3", 2),
    ("6", 2, "2,0", 2),
    ("7", 2, "3,1", 2),
];
