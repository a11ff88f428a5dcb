//! Ray vectors, basis lists and span tables as printed in the reference listing.

/// Printed half-blocks: (first id, 16 vectors). Entries are written with `-` for negative ones.
pub const PRINTED_RAYS: [(usize, [&str; 16]); 4] = [
    (
        33,
        [
            "+ 0 0 + 0 - + 0 0 + + 0 - 0 0 + 0 - + 0 + 0 0 + + 0 0 - 0 - - 0",
            "+ 0 0 - 0 - - 0 0 - + 0 + 0 0 + 0 - - 0 + 0 0 - - 0 0 - 0 + - 0",
            "0 + + 0 - 0 0 + + 0 0 + 0 - + 0 + 0 0 - 0 - - 0 0 - + 0 + 0 0 +",
            "0 + + 0 + 0 0 - + 0 0 + 0 + - 0 + 0 0 - 0 + + 0 0 - + 0 - 0 0 -",
            "+ 0 0 - 0 + + 0 0 + - 0 + 0 0 + 0 - - 0 - 0 0 + + 0 0 + 0 + - 0",
            "0 + + 0 - 0 0 + - 0 0 - 0 + - 0 - 0 0 + 0 + + 0 0 - + 0 + 0 0 +",
            "0 + - 0 - 0 0 - + 0 0 - 0 - - 0 + 0 0 + 0 - + 0 0 - - 0 + 0 0 -",
            "+ 0 0 - 0 + + 0 0 - + 0 - 0 0 - 0 - - 0 - 0 0 + - 0 0 - 0 - + 0",
            "+ 0 0 - 0 - - 0 0 - + 0 + 0 0 + 0 + + 0 - 0 0 + + 0 0 + 0 - + 0",
            "+ 0 0 + 0 - + 0 0 + + 0 - 0 0 + 0 + - 0 - 0 0 - - 0 0 + 0 + + 0",
            "+ 0 0 - 0 + + 0 0 + - 0 + 0 0 + 0 + + 0 + 0 0 - - 0 0 - 0 - + 0",
            "0 + + 0 - 0 0 + + 0 0 + 0 - + 0 - 0 0 + 0 + + 0 0 + - 0 - 0 0 -",
            "+ 0 0 + 0 + - 0 0 + + 0 + 0 0 - 0 + - 0 + 0 0 + - 0 0 + 0 - - 0",
            "0 + - 0 + 0 0 + - 0 0 + 0 - - 0 - 0 0 - 0 - + 0 0 - - 0 - 0 0 +",
            "+ 0 0 + 0 - + 0 0 - - 0 + 0 0 - 0 - + 0 + 0 0 + - 0 0 + 0 + + 0",
            "+ 0 0 - 0 - - 0 0 + - 0 - 0 0 - 0 + + 0 - 0 0 + - 0 0 - 0 + - 0",
        ],
    ),
    (
        65,
        [
            "0 0 + + 0 0 + + 0 0 0 0 0 0 0 0 0 0 + + 0 0 + + 0 0 0 0 0 0 0 0",
            "+ + 0 0 + + 0 0 0 0 0 0 0 0 0 0 + + 0 0 + + 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0",
            "0 0 + - 0 0 + - 0 0 0 0 0 0 0 0 0 0 - + 0 0 - + 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 + + 0 0 - - 0 0 0 0 0 0 0 0 0 0 + + 0 0 - -",
            "0 0 + + 0 0 - - 0 0 0 0 0 0 0 0 0 0 + + 0 0 - - 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 + + 0 0 - - 0 0 0 0 0 0 0 0 0 0 - - 0 0 + + 0 0",
            "+ + 0 0 - - 0 0 0 0 0 0 0 0 0 0 - - 0 0 + + 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 0 0 0 0 0 0 0 0 - + 0 0 - +",
            "0 0 0 0 0 0 0 0 + + 0 0 + + 0 0 0 0 0 0 0 0 0 0 - - 0 0 - - 0 0",
            "+ + 0 0 + + 0 0 0 0 0 0 0 0 0 0 - - 0 0 - - 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 + - 0 0 - + 0 0 0 0 0 0 0 0 0 0 - + 0 0 + - 0 0",
            "0 0 0 0 0 0 0 0 + - 0 0 - + 0 0 0 0 0 0 0 0 0 0 + - 0 0 - + 0 0",
            "+ - 0 0 + - 0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 0 0 0 0 0 0 0 0",
            "+ - 0 0 - + 0 0 0 0 0 0 0 0 0 0 + - 0 0 - + 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 + - 0 0 - + 0 0 0 0 0 0 0 0 0 0 - + 0 0 + -",
        ],
    ),
    (
        97,
        [
            "+ 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0",
            "0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0",
            "+ 0 + 0 0 0 0 0 - 0 - 0 0 0 0 0 - 0 - 0 0 0 0 0 + 0 + 0 0 0 0 0",
            "0 0 0 0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0 0 - 0 + 0 0 0 0 0 + 0 - 0",
            "0 0 0 0 + 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0 0 - 0 + 0",
            "+ 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0",
            "0 0 0 0 0 + 0 + 0 0 0 0 0 - 0 - 0 0 0 0 0 + 0 + 0 0 0 0 0 - 0 -",
            "0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0 - 0 - 0 0 0 0 0 - 0 - 0",
            "0 0 0 0 0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0 0 - 0 + 0 0 0 0 0 + 0 -",
            "0 0 0 0 0 + 0 + 0 0 0 0 0 + 0 + 0 0 0 0 0 - 0 - 0 0 0 0 0 - 0 -",
            "+ 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0 0 - 0 + 0 0 0 0 0",
            "0 0 0 0 + 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0 + 0 - 0 0 0 0 0 + 0 - 0",
            "0 0 0 0 + 0 + 0 0 0 0 0 - 0 - 0 0 0 0 0 - 0 - 0 0 0 0 0 + 0 + 0",
            "0 0 0 0 0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0 0 + 0 - 0 0 0 0 0 - 0 +",
            "0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0 0 + 0 - 0 0 0 0 0 - 0 + 0 0 0 0",
            "0 + 0 + 0 0 0 0 0 - 0 - 0 0 0 0 0 + 0 + 0 0 0 0 0 - 0 - 0 0 0 0",
        ],
    ),
    (
        129,
        [
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + + 0 0 + + 0 0 + + 0 0 + + 0 0",
            "+ + 0 0 + + 0 0 + + 0 0 + + 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + + 0 0 + + 0 0 - - 0 0 - - 0 0",
            "+ - 0 0 - + 0 0 - + 0 0 + - 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "+ + 0 0 + + 0 0 - - 0 0 - - 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 - + 0 0 - +",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + - 0 0 - + 0 0 + - 0 0 - +",
            "0 0 + + 0 0 - - 0 0 + + 0 0 - - 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 + - 0 0 + - 0 0",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + + 0 0 - - 0 0 - - 0 0 + + 0 0",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + + 0 0 - - 0 0 + + 0 0 - -",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + + 0 0 - - 0 0 - - 0 0 + +",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + - 0 0 - + 0 0 + - 0 0 - + 0 0",
            "0 0 + - 0 0 - + 0 0 - + 0 0 + - 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 + - 0 0 + -",
            "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 + - 0 0 + - 0 0 - + 0 0 - + 0 0",
        ],
    ),
];

/// Partner placement: the ray at `.0` is the partner of the printed ray `.1`.
/// Ids follow `k -> k + 16` except for 154 and 155, which the basis lists force to swap.
pub const PARTNER_PLACEMENT: [(usize, usize); 64] = [
    (49, 33), (50, 34), (51, 35), (52, 36),
    (53, 37), (54, 38), (55, 39), (56, 40),
    (57, 41), (58, 42), (59, 43), (60, 44),
    (61, 45), (62, 46), (63, 47), (64, 48),
    (81, 65), (82, 66), (83, 67), (84, 68),
    (85, 69), (86, 70), (87, 71), (88, 72),
    (89, 73), (90, 74), (91, 75), (92, 76),
    (93, 77), (94, 78), (95, 79), (96, 80),
    (113, 97), (114, 98), (115, 99), (116, 100),
    (117, 101), (118, 102), (119, 103), (120, 104),
    (121, 105), (122, 106), (123, 107), (124, 108),
    (125, 109), (126, 110), (127, 111), (128, 112),
    (145, 129), (146, 130), (147, 131), (148, 132),
    (149, 133), (150, 134), (151, 135), (152, 136),
    (153, 137), (154, 139), (155, 138), (156, 140),
    (157, 141), (158, 142), (159, 143), (160, 144),
];

/// The 21 printed bases, numbered 1..=21 in print order.
/// Basis 14 prints its 24th entry as `08`; orthogonality forces it to be 108.
pub const PROOF_BASES: [[usize; 32]; 21] = [
    [65, 66, 67, 71, 72, 74, 75, 78, 80, 81, 82, 84, 85, 86, 89, 90, 91, 92, 93, 95, 132, 134, 136, 139, 140, 141, 143, 151, 153, 155, 158, 160],
    [67, 69, 70, 71, 72, 76, 77, 78, 79, 80, 84, 85, 86, 87, 88, 89, 92, 93, 95, 96, 129, 130, 131, 133, 134, 143, 145, 146, 147, 149, 153, 160],
    [36, 37, 40, 43, 45, 46, 49, 50, 51, 54, 55, 57, 58, 60, 63, 64, 80, 92, 93, 95, 137, 138, 144, 145, 146, 147, 149, 150, 152, 154, 156, 159],
    [2, 4, 5, 7, 10, 12, 13, 15, 18, 20, 21, 23, 26, 28, 29, 31, 97, 99, 102, 103, 105, 106, 107, 110, 113, 115, 118, 119, 121, 122, 123, 126],
    [33, 34, 38, 44, 47, 53, 56, 62, 66, 67, 68, 71, 73, 74, 75, 80, 81, 82, 83, 85, 89, 90, 93, 94, 132, 136, 139, 140, 141, 151, 155, 158],
    [66, 68, 69, 70, 71, 72, 73, 74, 75, 80, 81, 83, 85, 86, 87, 88, 92, 93, 94, 95, 132, 137, 141, 144, 145, 146, 147, 149, 150, 151, 158, 159],
    [65, 66, 67, 69, 70, 77, 78, 79, 81, 82, 83, 85, 86, 93, 94, 95, 99, 100, 101, 104, 105, 106, 107, 109, 115, 116, 117, 120, 121, 122, 123, 125],
    [36, 37, 43, 45, 50, 54, 57, 63, 67, 78, 84, 89, 129, 133, 134, 135, 138, 139, 142, 145, 146, 147, 148, 149, 151, 152, 153, 154, 155, 156, 157, 158],
    [34, 38, 41, 47, 52, 53, 59, 61, 68, 69, 70, 73, 76, 77, 79, 83, 87, 88, 94, 96, 129, 130, 131, 133, 135, 137, 138, 142, 145, 149, 150, 154],
    [2, 3, 5, 8, 9, 12, 14, 15, 17, 20, 22, 23, 26, 27, 29, 32, 33, 34, 37, 40, 41, 42, 43, 45, 47, 48, 51, 52, 54, 55, 60, 62],
    [36, 43, 45, 51, 55, 57, 58, 64, 65, 67, 68, 70, 71, 72, 75, 76, 78, 79, 80, 81, 82, 84, 85, 86, 88, 89, 90, 91, 92, 93, 94, 95],
    [66, 74, 75, 80, 81, 92, 93, 95, 132, 134, 136, 137, 138, 139, 140, 141, 143, 144, 145, 146, 147, 149, 150, 151, 152, 153, 154, 155, 156, 158, 159, 160],
    [19, 20, 23, 24, 27, 28, 31, 32, 66, 67, 74, 75, 76, 77, 78, 79, 81, 84, 89, 96, 136, 138, 142, 145, 147, 152, 153, 154, 155, 156, 157, 160],
    [1, 2, 3, 4, 9, 10, 11, 12, 17, 18, 19, 20, 25, 26, 27, 28, 98, 100, 101, 103, 104, 105, 106, 108, 109, 110, 113, 115, 118, 123, 127, 128],
    [1, 2, 5, 6, 17, 18, 21, 22, 65, 67, 69, 70, 71, 74, 76, 77, 81, 82, 84, 86, 87, 88, 90, 91, 134, 135, 142, 143, 148, 153, 157, 160],
    [99, 100, 103, 105, 109, 110, 111, 112, 115, 116, 119, 121, 125, 126, 127, 128, 129, 130, 135, 136, 137, 139, 141, 143, 145, 146, 151, 152, 153, 154, 157, 159],
    [11, 12, 15, 16, 17, 18, 21, 22, 25, 26, 27, 28, 29, 30, 31, 32, 65, 68, 70, 83, 87, 90, 92, 93, 130, 132, 133, 150, 151, 154, 156, 159],
    [33, 35, 36, 37, 38, 39, 41, 46, 49, 51, 52, 53, 54, 55, 57, 62, 98, 100, 103, 106, 107, 108, 109, 110, 114, 116, 119, 122, 123, 124, 125, 126],
    [67, 69, 70, 71, 72, 78, 80, 84, 85, 86, 87, 88, 89, 92, 93, 95, 129, 130, 131, 132, 133, 134, 141, 143, 145, 146, 147, 149, 151, 153, 158, 160],
    [33, 35, 36, 37, 39, 40, 42, 43, 44, 45, 46, 48, 49, 50, 51, 54, 55, 56, 57, 58, 60, 62, 63, 64, 144, 146, 147, 148, 152, 156, 157, 159],
    [1, 3, 6, 8, 9, 11, 14, 16, 17, 19, 22, 24, 25, 27, 30, 32, 98, 100, 101, 104, 108, 109, 111, 112, 114, 116, 117, 120, 124, 125, 127, 128],
];

/// Printed 31-point columns for the spans of A, B, A', B', C (row order as printed).
pub const SPAN_POINTS: [[&str; 31]; 5] = [
    [
        "XZXII", "IXZXI", "IIXZX", "XIIXZ", "ZXIIX", "XYYXI", "XZIZX", "IZXXZ",
        "YYXIX", "IXYYX", "XXZIZ", "ZIZXX", "XIXYY", "ZXXZI", "YXIXY", "XYZYX",
        "IYYIZ", "YZYXX", "IZIYY", "YYIZI", "ZYXXY", "XXYZY", "ZIYYI", "YIZIY",
        "YXXYZ", "IYZZY", "YZZYI", "ZZYIY", "ZYIYZ", "YIYZZ", "ZZZZZ",
    ],
    [
        "IZIII", "IIZII", "IIIZI", "IIIIZ", "ZIIII", "IZZII", "IZIZI", "IZIIZ",
        "ZZIII", "IIZZI", "IIZIZ", "ZIZII", "IIIZZ", "ZIIZI", "ZIIIZ", "IZZZI",
        "IZZIZ", "ZZZII", "IZIZZ", "ZZIZI", "ZZIIZ", "IIZZZ", "ZIZZI", "ZIZIZ",
        "ZIIZZ", "IZZZZ", "ZZZZI", "ZZZIZ", "ZZIZZ", "ZIZZZ", "ZZZZZ",
    ],
    [
        "IZIII", "IIIZI", "XZXII", "IIXZX", "IIIIX", "IZIZI", "XIXII", "IZXZX",
        "IZIIX", "XZXZI", "IIXIX", "IIIZX", "XZIZX", "XZXIX", "IIXZI", "XIXZI",
        "IZXIX", "IZIZX", "XIIZX", "XIXIX", "IZXZI", "XZIIX", "XZXZX", "IIXII",
        "XZIZI", "XIIIX", "XIXZX", "IZXII", "XIIZI", "XZIII", "XIIII",
    ],
    [
        "IIZII", "IIIIZ", "XIIXZ", "IXZXI", "IXIII", "IIZIZ", "XIZXZ", "IXIXI",
        "IXZII", "XIIXI", "IXZXZ", "IXIIZ", "XXZIZ", "XXIXZ", "IIZXI", "XIZXI",
        "IXIXZ", "IXZIZ", "XXIIZ", "XXZXZ", "IIIXI", "XXZII", "XXIXI", "IIZXZ",
        "XIZIZ", "XXIII", "XXZXI", "IIIXZ", "XIIIZ", "XIZII", "XIIII",
    ],
    [
        "IXIII", "IIIZI", "ZIIII", "ZXIIX", "IIXZX", "IXIZI", "ZXIII", "ZIIIX",
        "IXXZX", "ZIIZI", "ZXIZX", "IIXIX", "IXIIX", "ZIXZX", "ZXXZI", "ZXIZI",
        "ZIIZX", "IXXIX", "IIIIX", "ZXXZX", "ZIXZI", "IXIZX", "ZIXIX", "ZXXII",
        "IXXZI", "IIIZX", "ZXXIX", "ZIXII", "IIXZI", "IXXII", "IIXII",
    ],
];

/// Projective dimensions of pairwise span intersections; the diagonal holds 4.
pub const INTERSECTION_DIMENSIONS: [[i32; 5]; 5] = [
    [4, 0, 1, 1, 1],
    [0, 4, 1, 1, 1],
    [1, 1, 4, 0, 2],
    [1, 1, 0, 4, 0],
    [1, 1, 2, 0, 4],
];

/// Printed point lists of the ten pairwise span intersections.
pub const INTERSECTION_POINTS: [(usize, usize, &[&str]); 10] = [
    (0, 1, &["ZZZZZ"]),
    (0, 2, &["XZIZX", "XZXII", "IIXZX"]),
    (0, 3, &["XXZIZ", "XIIXZ", "IXZXI"]),
    (0, 4, &["ZXXZI", "ZXIIX", "IIXZX"]),
    (1, 2, &["IZIZI", "IZIII", "IIIZI"]),
    (1, 3, &["IIZIZ", "IIZII", "IIIIZ"]),
    (1, 4, &["ZIIZI", "IIIZI", "ZIIII"]),
    (2, 3, &["XIIII"]),
    (2, 4, &["IIXIX", "IIIZX", "IIXZI", "IIXII", "IIIZI", "IIXZX", "IIIIX"]),
    (3, 4, &["IXIII"]),
];
