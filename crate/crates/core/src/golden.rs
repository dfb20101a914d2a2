//! Published data of the three worked examples, embedded verbatim so the
//! reproduction run is self-contained.

use crate::linalg::IntMatrix;

/// Converts one of the constant tables below into an [`IntMatrix`].
pub fn to_matrix<const C: usize>(rows: &[[u32; C]]) -> IntMatrix {
    IntMatrix::from_fn(rows.len(), C, |i, j| rows[i][j].into())
}

/// Example 1: `M(Fano, D2)`, 7 x 28.
pub const MA: [[u32; 28]; 7] = [
    [
        2, 2, 1, 1, 1, 2, 1, 1, 0, 0, 1, 0, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 2, 2, 1, 1, 0, 1,
    ],
    [
        1, 0, 1, 0, 2, 1, 2, 1, 2, 1, 0, 1, 2, 2, 1, 1, 2, 1, 1, 0, 2, 2, 2, 1, 2, 2, 2, 1,
    ],
    [
        0, 1, 0, 1, 1, 1, 0, 2, 1, 2, 2, 1, 1, 0, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2,
    ],
    [
        1, 2, 2, 1, 1, 2, 2, 2, 2, 1, 2, 2, 0, 1, 0, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1, 2, 1, 2,
    ],
    [
        1, 1, 2, 2, 0, 0, 1, 0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 2, 0, 1, 1, 1, 2, 1, 2, 2,
    ],
    [
        2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 2, 0, 0, 1, 0, 1, 1, 2, 1, 2, 2, 0, 1, 1,
    ],
    [
        2, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0,
    ],
];

/// Example 3: `M(D1, D2)`, 10 x 15.
pub const MC: [[u32; 15]; 10] = [
    [2, 1, 1, 2, 1, 1, 1, 2, 1, 0, 1, 0, 1, 0, 1],
    [2, 1, 1, 1, 2, 1, 1, 1, 2, 0, 0, 1, 0, 1, 1],
    [1, 2, 2, 1, 1, 1, 1, 0, 0, 2, 1, 1, 1, 1, 0],
    [1, 2, 1, 2, 1, 1, 0, 1, 0, 1, 2, 1, 1, 0, 1],
    [1, 1, 2, 1, 2, 0, 1, 0, 1, 1, 0, 1, 1, 2, 1],
    [1, 1, 1, 0, 0, 2, 2, 1, 1, 2, 1, 1, 1, 1, 0],
    [1, 1, 0, 0, 1, 2, 1, 1, 2, 1, 1, 2, 0, 1, 1],
    [1, 0, 1, 1, 0, 1, 2, 2, 1, 1, 1, 0, 2, 1, 1],
    [0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 2, 2, 1, 1, 2],
    [0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2],
];

/// Example 3: `M·Mᵀ`, 10 x 10.
pub const MC_MCT: [[u32; 10]; 10] = [
    [21, 17, 13, 17, 13, 13, 13, 17, 13, 13],
    [17, 21, 13, 13, 17, 13, 17, 13, 13, 13],
    [13, 13, 21, 17, 17, 17, 13, 13, 13, 13],
    [17, 13, 17, 21, 13, 13, 13, 13, 17, 13],
    [13, 17, 17, 13, 21, 13, 13, 13, 13, 17],
    [13, 13, 17, 13, 13, 21, 17, 17, 13, 13],
    [13, 17, 13, 13, 13, 17, 21, 13, 17, 13],
    [17, 13, 13, 13, 13, 17, 13, 21, 13, 17],
    [13, 13, 13, 17, 13, 13, 17, 13, 21, 17],
    [13, 13, 13, 13, 17, 13, 13, 17, 17, 21],
];

/// Example 3: `Mᵀ·M`, 15 x 15.
pub const MCT_MC: [[u32; 15]; 15] = [
    [14, 11, 11, 11, 11, 11, 11, 11, 11, 8, 8, 8, 8, 8, 8],
    [11, 14, 11, 11, 11, 11, 8, 8, 8, 11, 11, 11, 8, 8, 8],
    [11, 11, 14, 11, 11, 8, 11, 8, 8, 11, 8, 8, 11, 11, 8],
    [11, 11, 11, 14, 11, 8, 8, 11, 8, 8, 11, 8, 11, 8, 11],
    [11, 11, 11, 11, 14, 8, 8, 8, 11, 8, 8, 11, 8, 11, 11],
    [11, 11, 8, 8, 8, 14, 11, 11, 11, 11, 11, 11, 8, 8, 8],
    [11, 8, 11, 8, 8, 11, 14, 11, 11, 11, 8, 8, 11, 11, 8],
    [11, 8, 8, 11, 8, 11, 11, 14, 11, 8, 11, 8, 11, 8, 11],
    [11, 8, 8, 8, 11, 11, 11, 11, 14, 8, 8, 11, 8, 11, 11],
    [8, 11, 11, 8, 8, 11, 11, 8, 8, 14, 11, 11, 11, 11, 8],
    [8, 11, 8, 11, 8, 11, 8, 11, 8, 11, 14, 11, 11, 8, 11],
    [8, 11, 8, 8, 11, 11, 8, 8, 11, 11, 11, 14, 8, 11, 11],
    [8, 8, 11, 11, 8, 8, 11, 11, 8, 11, 11, 8, 14, 11, 11],
    [8, 8, 11, 8, 11, 8, 11, 8, 11, 11, 8, 11, 11, 14, 11],
    [8, 8, 8, 11, 11, 8, 8, 11, 11, 8, 11, 11, 11, 11, 14],
];

/// Example 1: diagonal and off-diagonal of `M_a·M_aᵀ`.
pub const EX1_MMT_DIAG: u32 = 60;
pub const EX1_MMT_OFF: u32 = 44;
pub const EX1_MU1: u32 = 324;
pub const EX1_MU2: u32 = 16;
/// `Z_{D1}(1,2)` and `Z_{D1}(1,3)` for the Fano plane.
pub const EX1_Z12: [i8; 7] = [0, -1, 0, 0, 1, -1, 1];
pub const EX1_Z13: [i8; 7] = [1, -1, -1, 0, 1, 0, 0];
/// `M(Fano, Fano)`: 3 on the diagonal, 1 elsewhere; its square: 15 / 11.
pub const EX1_MB_DIAG: u32 = 3;
pub const EX1_MB_OFF: u32 = 1;
pub const EX1_MB_SQ_DIAG: u32 = 15;
pub const EX1_MB_SQ_OFF: u32 = 11;
pub const EX1_SELF_MU1: u32 = 81;
pub const EX1_SELF_MU2: u32 = 4;

/// Example 2: incidence matrix of the Fano plane.
pub const EX2_MMT_DIAG: u32 = 3;
pub const EX2_MMT_OFF: u32 = 1;
pub const EX2_MU1: u32 = 9;
pub const EX2_MU2: u32 = 2;
pub const EX2_RANK: usize = 7;

/// Example 3 eigendata.
pub const EX3_MU1: u32 = 150;
pub const EX3_MU2: u32 = 12;
pub const EX3_KERNEL_MMT: usize = 4;
pub const EX3_KERNEL_MTM: usize = 9;
pub const EX3_MMT_VALUES: [u32; 3] = [13, 17, 21];
pub const EX3_MTM_VALUES: [u32; 3] = [8, 11, 14];
pub const EX3_Z12: [i8; 10] = [1, 1, -1, -1, 0, 0, 0, 1, -1, 0];
pub const EX3_Z34: [i8; 10] = [-1, 0, 1, -1, 1, 1, 0, 0, -1, 0];
/// Published spanning set of `ker M_c·M_cᵀ`.
pub const EX3_KERNEL_VECTORS: [[i8; 10]; 4] = [
    [1, -1, 1, -1, 0, -1, 1, 0, 0, 0],
    [-1, 1, 1, 0, -1, -1, 0, 1, 0, 0],
    [1, 0, 2, -2, -1, -1, 0, 0, 1, 0],
    [0, 1, 2, -1, -2, -1, 0, 0, 0, 1],
];
