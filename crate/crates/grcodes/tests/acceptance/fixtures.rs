//! Frozen index patterns for matrix images over product-group listings.
//!
//! Entry (i, j) is the 1-based listing position of g_i^{-1} g_j, computed
//! independently of the library and frozen here; the block-form suite checks
//! `GroupTable::sigma_pattern` against these verbatim.

#![allow(clippy::large_const_arrays)]

pub const C3XC5_F1: [[u16; 15]; 15] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [3, 1, 2, 6, 4, 5, 9, 7, 8, 12, 10, 11, 15, 13, 14],
    [2, 3, 1, 5, 6, 4, 8, 9, 7, 11, 12, 10, 14, 15, 13],
    [13, 14, 15, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
    [15, 13, 14, 3, 1, 2, 6, 4, 5, 9, 7, 8, 12, 10, 11],
    [14, 15, 13, 2, 3, 1, 5, 6, 4, 8, 9, 7, 11, 12, 10],
    [10, 11, 12, 13, 14, 15, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [12, 10, 11, 15, 13, 14, 3, 1, 2, 6, 4, 5, 9, 7, 8],
    [11, 12, 10, 14, 15, 13, 2, 3, 1, 5, 6, 4, 8, 9, 7],
    [7, 8, 9, 10, 11, 12, 13, 14, 15, 1, 2, 3, 4, 5, 6],
    [9, 7, 8, 12, 10, 11, 15, 13, 14, 3, 1, 2, 6, 4, 5],
    [8, 9, 7, 11, 12, 10, 14, 15, 13, 2, 3, 1, 5, 6, 4],
    [4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 1, 2, 3],
    [6, 4, 5, 9, 7, 8, 12, 10, 11, 15, 13, 14, 3, 1, 2],
    [5, 6, 4, 8, 9, 7, 11, 12, 10, 14, 15, 13, 2, 3, 1],
];

pub const C3XC5_F2: [[u16; 15]; 15] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [5, 1, 2, 3, 4, 10, 6, 7, 8, 9, 15, 11, 12, 13, 14],
    [4, 5, 1, 2, 3, 9, 10, 6, 7, 8, 14, 15, 11, 12, 13],
    [3, 4, 5, 1, 2, 8, 9, 10, 6, 7, 13, 14, 15, 11, 12],
    [2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 12, 13, 14, 15, 11],
    [11, 12, 13, 14, 15, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [15, 11, 12, 13, 14, 5, 1, 2, 3, 4, 10, 6, 7, 8, 9],
    [14, 15, 11, 12, 13, 4, 5, 1, 2, 3, 9, 10, 6, 7, 8],
    [13, 14, 15, 11, 12, 3, 4, 5, 1, 2, 8, 9, 10, 6, 7],
    [12, 13, 14, 15, 11, 2, 3, 4, 5, 1, 7, 8, 9, 10, 6],
    [6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 1, 2, 3, 4, 5],
    [10, 6, 7, 8, 9, 15, 11, 12, 13, 14, 5, 1, 2, 3, 4],
    [9, 10, 6, 7, 8, 14, 15, 11, 12, 13, 4, 5, 1, 2, 3],
    [8, 9, 10, 6, 7, 13, 14, 15, 11, 12, 3, 4, 5, 1, 2],
    [7, 8, 9, 10, 6, 12, 13, 14, 15, 11, 2, 3, 4, 5, 1],
];

pub const C3XD3_F1: [[u16; 18]; 18] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18],
    [3, 1, 2, 6, 4, 5, 9, 7, 8, 12, 10, 11, 15, 13, 14, 18, 16, 17],
    [2, 3, 1, 5, 6, 4, 8, 9, 7, 11, 12, 10, 14, 15, 13, 17, 18, 16],
    [7, 8, 9, 1, 2, 3, 4, 5, 6, 13, 14, 15, 16, 17, 18, 10, 11, 12],
    [9, 7, 8, 3, 1, 2, 6, 4, 5, 15, 13, 14, 18, 16, 17, 12, 10, 11],
    [8, 9, 7, 2, 3, 1, 5, 6, 4, 14, 15, 13, 17, 18, 16, 11, 12, 10],
    [4, 5, 6, 7, 8, 9, 1, 2, 3, 16, 17, 18, 10, 11, 12, 13, 14, 15],
    [6, 4, 5, 9, 7, 8, 3, 1, 2, 18, 16, 17, 12, 10, 11, 15, 13, 14],
    [5, 6, 4, 8, 9, 7, 2, 3, 1, 17, 18, 16, 11, 12, 10, 14, 15, 13],
    [10, 11, 12, 13, 14, 15, 16, 17, 18, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [12, 10, 11, 15, 13, 14, 18, 16, 17, 3, 1, 2, 6, 4, 5, 9, 7, 8],
    [11, 12, 10, 14, 15, 13, 17, 18, 16, 2, 3, 1, 5, 6, 4, 8, 9, 7],
    [13, 14, 15, 16, 17, 18, 10, 11, 12, 7, 8, 9, 1, 2, 3, 4, 5, 6],
    [15, 13, 14, 18, 16, 17, 12, 10, 11, 9, 7, 8, 3, 1, 2, 6, 4, 5],
    [14, 15, 13, 17, 18, 16, 11, 12, 10, 8, 9, 7, 2, 3, 1, 5, 6, 4],
    [16, 17, 18, 10, 11, 12, 13, 14, 15, 4, 5, 6, 7, 8, 9, 1, 2, 3],
    [18, 16, 17, 12, 10, 11, 15, 13, 14, 6, 4, 5, 9, 7, 8, 3, 1, 2],
    [17, 18, 16, 11, 12, 10, 14, 15, 13, 5, 6, 4, 8, 9, 7, 2, 3, 1],
];

pub const C2XD5_F2: [[u16; 20]; 20] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20],
    [5, 1, 2, 3, 4, 7, 8, 9, 10, 6, 15, 11, 12, 13, 14, 17, 18, 19, 20, 16],
    [4, 5, 1, 2, 3, 8, 9, 10, 6, 7, 14, 15, 11, 12, 13, 18, 19, 20, 16, 17],
    [3, 4, 5, 1, 2, 9, 10, 6, 7, 8, 13, 14, 15, 11, 12, 19, 20, 16, 17, 18],
    [2, 3, 4, 5, 1, 10, 6, 7, 8, 9, 12, 13, 14, 15, 11, 20, 16, 17, 18, 19],
    [6, 7, 8, 9, 10, 1, 2, 3, 4, 5, 16, 17, 18, 19, 20, 11, 12, 13, 14, 15],
    [7, 8, 9, 10, 6, 5, 1, 2, 3, 4, 17, 18, 19, 20, 16, 15, 11, 12, 13, 14],
    [8, 9, 10, 6, 7, 4, 5, 1, 2, 3, 18, 19, 20, 16, 17, 14, 15, 11, 12, 13],
    [9, 10, 6, 7, 8, 3, 4, 5, 1, 2, 19, 20, 16, 17, 18, 13, 14, 15, 11, 12],
    [10, 6, 7, 8, 9, 2, 3, 4, 5, 1, 20, 16, 17, 18, 19, 12, 13, 14, 15, 11],
    [11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [15, 11, 12, 13, 14, 17, 18, 19, 20, 16, 5, 1, 2, 3, 4, 7, 8, 9, 10, 6],
    [14, 15, 11, 12, 13, 18, 19, 20, 16, 17, 4, 5, 1, 2, 3, 8, 9, 10, 6, 7],
    [13, 14, 15, 11, 12, 19, 20, 16, 17, 18, 3, 4, 5, 1, 2, 9, 10, 6, 7, 8],
    [12, 13, 14, 15, 11, 20, 16, 17, 18, 19, 2, 3, 4, 5, 1, 10, 6, 7, 8, 9],
    [16, 17, 18, 19, 20, 11, 12, 13, 14, 15, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5],
    [17, 18, 19, 20, 16, 15, 11, 12, 13, 14, 7, 8, 9, 10, 6, 5, 1, 2, 3, 4],
    [18, 19, 20, 16, 17, 14, 15, 11, 12, 13, 8, 9, 10, 6, 7, 4, 5, 1, 2, 3],
    [19, 20, 16, 17, 18, 13, 14, 15, 11, 12, 9, 10, 6, 7, 8, 3, 4, 5, 1, 2],
    [20, 16, 17, 18, 19, 12, 13, 14, 15, 11, 10, 6, 7, 8, 9, 2, 3, 4, 5, 1],
];

pub const C5XD3_F3: [[u16; 30]; 30] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30],
    [5, 1, 2, 3, 4, 10, 6, 7, 8, 9, 15, 11, 12, 13, 14, 20, 16, 17, 18, 19, 25, 21, 22, 23, 24, 30, 26, 27, 28, 29],
    [4, 5, 1, 2, 3, 9, 10, 6, 7, 8, 14, 15, 11, 12, 13, 19, 20, 16, 17, 18, 24, 25, 21, 22, 23, 29, 30, 26, 27, 28],
    [3, 4, 5, 1, 2, 8, 9, 10, 6, 7, 13, 14, 15, 11, 12, 18, 19, 20, 16, 17, 23, 24, 25, 21, 22, 28, 29, 30, 26, 27],
    [2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 12, 13, 14, 15, 11, 17, 18, 19, 20, 16, 22, 23, 24, 25, 21, 27, 28, 29, 30, 26],
    [11, 12, 13, 14, 15, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 26, 27, 28, 29, 30, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25],
    [15, 11, 12, 13, 14, 5, 1, 2, 3, 4, 10, 6, 7, 8, 9, 30, 26, 27, 28, 29, 20, 16, 17, 18, 19, 25, 21, 22, 23, 24],
    [14, 15, 11, 12, 13, 4, 5, 1, 2, 3, 9, 10, 6, 7, 8, 29, 30, 26, 27, 28, 19, 20, 16, 17, 18, 24, 25, 21, 22, 23],
    [13, 14, 15, 11, 12, 3, 4, 5, 1, 2, 8, 9, 10, 6, 7, 28, 29, 30, 26, 27, 18, 19, 20, 16, 17, 23, 24, 25, 21, 22],
    [12, 13, 14, 15, 11, 2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 27, 28, 29, 30, 26, 17, 18, 19, 20, 16, 22, 23, 24, 25, 21],
    [6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 1, 2, 3, 4, 5, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 16, 17, 18, 19, 20],
    [10, 6, 7, 8, 9, 15, 11, 12, 13, 14, 5, 1, 2, 3, 4, 25, 21, 22, 23, 24, 30, 26, 27, 28, 29, 20, 16, 17, 18, 19],
    [9, 10, 6, 7, 8, 14, 15, 11, 12, 13, 4, 5, 1, 2, 3, 24, 25, 21, 22, 23, 29, 30, 26, 27, 28, 19, 20, 16, 17, 18],
    [8, 9, 10, 6, 7, 13, 14, 15, 11, 12, 3, 4, 5, 1, 2, 23, 24, 25, 21, 22, 28, 29, 30, 26, 27, 18, 19, 20, 16, 17],
    [7, 8, 9, 10, 6, 12, 13, 14, 15, 11, 2, 3, 4, 5, 1, 22, 23, 24, 25, 21, 27, 28, 29, 30, 26, 17, 18, 19, 20, 16],
    [16, 17, 18, 19, 20, 26, 27, 28, 29, 30, 21, 22, 23, 24, 25, 1, 2, 3, 4, 5, 11, 12, 13, 14, 15, 6, 7, 8, 9, 10],
    [20, 16, 17, 18, 19, 30, 26, 27, 28, 29, 25, 21, 22, 23, 24, 5, 1, 2, 3, 4, 15, 11, 12, 13, 14, 10, 6, 7, 8, 9],
    [19, 20, 16, 17, 18, 29, 30, 26, 27, 28, 24, 25, 21, 22, 23, 4, 5, 1, 2, 3, 14, 15, 11, 12, 13, 9, 10, 6, 7, 8],
    [18, 19, 20, 16, 17, 28, 29, 30, 26, 27, 23, 24, 25, 21, 22, 3, 4, 5, 1, 2, 13, 14, 15, 11, 12, 8, 9, 10, 6, 7],
    [17, 18, 19, 20, 16, 27, 28, 29, 30, 26, 22, 23, 24, 25, 21, 2, 3, 4, 5, 1, 12, 13, 14, 15, 11, 7, 8, 9, 10, 6],
    [21, 22, 23, 24, 25, 16, 17, 18, 19, 20, 26, 27, 28, 29, 30, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5, 11, 12, 13, 14, 15],
    [25, 21, 22, 23, 24, 20, 16, 17, 18, 19, 30, 26, 27, 28, 29, 10, 6, 7, 8, 9, 5, 1, 2, 3, 4, 15, 11, 12, 13, 14],
    [24, 25, 21, 22, 23, 19, 20, 16, 17, 18, 29, 30, 26, 27, 28, 9, 10, 6, 7, 8, 4, 5, 1, 2, 3, 14, 15, 11, 12, 13],
    [23, 24, 25, 21, 22, 18, 19, 20, 16, 17, 28, 29, 30, 26, 27, 8, 9, 10, 6, 7, 3, 4, 5, 1, 2, 13, 14, 15, 11, 12],
    [22, 23, 24, 25, 21, 17, 18, 19, 20, 16, 27, 28, 29, 30, 26, 7, 8, 9, 10, 6, 2, 3, 4, 5, 1, 12, 13, 14, 15, 11],
    [26, 27, 28, 29, 30, 21, 22, 23, 24, 25, 16, 17, 18, 19, 20, 11, 12, 13, 14, 15, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5],
    [30, 26, 27, 28, 29, 25, 21, 22, 23, 24, 20, 16, 17, 18, 19, 15, 11, 12, 13, 14, 10, 6, 7, 8, 9, 5, 1, 2, 3, 4],
    [29, 30, 26, 27, 28, 24, 25, 21, 22, 23, 19, 20, 16, 17, 18, 14, 15, 11, 12, 13, 9, 10, 6, 7, 8, 4, 5, 1, 2, 3],
    [28, 29, 30, 26, 27, 23, 24, 25, 21, 22, 18, 19, 20, 16, 17, 13, 14, 15, 11, 12, 8, 9, 10, 6, 7, 3, 4, 5, 1, 2],
    [27, 28, 29, 30, 26, 22, 23, 24, 25, 21, 17, 18, 19, 20, 16, 12, 13, 14, 15, 11, 7, 8, 9, 10, 6, 2, 3, 4, 5, 1],
];

pub const C2XD5_F4: [[u16; 20]; 20] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20],
    [5, 1, 2, 3, 4, 10, 6, 7, 8, 9, 15, 11, 12, 13, 14, 20, 16, 17, 18, 19],
    [4, 5, 1, 2, 3, 9, 10, 6, 7, 8, 14, 15, 11, 12, 13, 19, 20, 16, 17, 18],
    [3, 4, 5, 1, 2, 8, 9, 10, 6, 7, 13, 14, 15, 11, 12, 18, 19, 20, 16, 17],
    [2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 12, 13, 14, 15, 11, 17, 18, 19, 20, 16],
    [6, 10, 9, 8, 7, 1, 5, 4, 3, 2, 16, 20, 19, 18, 17, 11, 15, 14, 13, 12],
    [7, 6, 10, 9, 8, 2, 1, 5, 4, 3, 17, 16, 20, 19, 18, 12, 11, 15, 14, 13],
    [8, 7, 6, 10, 9, 3, 2, 1, 5, 4, 18, 17, 16, 20, 19, 13, 12, 11, 15, 14],
    [9, 8, 7, 6, 10, 4, 3, 2, 1, 5, 19, 18, 17, 16, 20, 14, 13, 12, 11, 15],
    [10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11],
    [11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [15, 11, 12, 13, 14, 20, 16, 17, 18, 19, 5, 1, 2, 3, 4, 10, 6, 7, 8, 9],
    [14, 15, 11, 12, 13, 19, 20, 16, 17, 18, 4, 5, 1, 2, 3, 9, 10, 6, 7, 8],
    [13, 14, 15, 11, 12, 18, 19, 20, 16, 17, 3, 4, 5, 1, 2, 8, 9, 10, 6, 7],
    [12, 13, 14, 15, 11, 17, 18, 19, 20, 16, 2, 3, 4, 5, 1, 7, 8, 9, 10, 6],
    [16, 20, 19, 18, 17, 11, 15, 14, 13, 12, 6, 10, 9, 8, 7, 1, 5, 4, 3, 2],
    [17, 16, 20, 19, 18, 12, 11, 15, 14, 13, 7, 6, 10, 9, 8, 2, 1, 5, 4, 3],
    [18, 17, 16, 20, 19, 13, 12, 11, 15, 14, 8, 7, 6, 10, 9, 3, 2, 1, 5, 4],
    [19, 18, 17, 16, 20, 14, 13, 12, 11, 15, 9, 8, 7, 6, 10, 4, 3, 2, 1, 5],
    [20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1],
];

