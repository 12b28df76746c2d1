//! Values and sets as printed in the source tables.
#![allow(dead_code)]

#[allow(unused_imports)]
pub use sets::{MISSING_FROM_PRINT, SETS};
#[allow(unused_imports)]
pub use values::SEQUENCES;

mod values {
    use selfsim::sequence::SequenceId::{self, *};

    /// (sequence, first index, printed values)
    pub const SEQUENCES: [(SequenceId, u64, &[u64]); 19] = [
        (Sf, 0, &[1, 1, 1, 2, 1, 3, 2, 5, 1, 6, 3, 9, 2]),
        (St, 0, &[0, 1, 1, 2, 1, 4, 2, 7, 1, 10, 4, 15, 2]),
        (Spa, 0, &[1, 0, 0, 1, 0, 1, 1, 1, 0, 2, 1, 2, 1]),
        (SpaMod, 0, &[0, 1, 1, 1, 1, 2, 1, 3, 1, 4, 2, 5, 1]),
        (Sp, 0, &[0, 1, 1, 3, 1, 5, 3, 11, 1, 13, 5, 23, 3]),
        (Snc, 0, &[1, 1, 1, 2, 1, 2, 2, 3, 1, 3, 2, 3, 2]),
        (Dsf, 0, &[0, 0, 0, 1, 0, 1, 1, 2, 0, 2, 1, 3, 1]),
        (Sl, 1, &[2, 1, 3, 1, 4, 3, 7, 1, 8, 4, 12, 3]),
        (Sb, 0, &[0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2]),
        (Psf, 1, &[1, 1, 3, 1, 5, 3, 10, 1, 12, 5, 20, 3]),
        (Pst, 1, &[1, 1, 3, 1, 9, 3, 18, 1, 29, 9, 46, 3]),
        (Pspa, 1, &[0, 0, 1, 0, 1, 1, 1, 0, 5, 1, 5, 1]),
        (PspaMod, 1, &[1, 1, 1, 1, 5, 1, 9, 1, 13, 5, 17, 1]),
        (Psp, 1, &[1, 1, 6, 1, 15, 6, 40, 1, 65, 15, 126, 6]),
        (Psnc, 0, &[0, 1, 1, 3, 1, 4, 3, 7, 1, 7, 4, 8, 3]),
        (Pdsf, 1, &[0, 0, 2, 0, 2, 2, 5, 0, 5, 2, 8, 2]),
        (Psl, 2, &[1, 6, 1, 14, 6, 31, 1, 47, 14, 81, 6]),
        (Psb, 1, &[1, 1, 3, 1, 5, 3, 6, 1, 7, 5, 11, 3]),
        (Phb, 1, &[1, 3, 2, 6, 5, 9, 3, 10, 9, 17, 7, 18]),
    ];
}

mod sets {
    use selfsim::family::FamilyId::{self, *};

    /// Printed set tables, one row per weight. The compact tables (single-digit
    /// parts run together) are written out with `+`. Row SPa(15) repeats
    /// `10+3+1+1` exactly as printed.
    pub const SETS: &[(FamilyId, u64, &[&str])] = &[
        (Sf, 1, &["1"]),
        (Sf, 2, &["2"]),
        (Sf, 3, &["2+1", "3"]),
        (Sf, 4, &["4"]),
        (Sf, 5, &["4+1", "3+2", "5"]),
        (Ob, 1, &["1"]),
        (Ob, 2, &["2"]),
        (Ob, 3, &["2+1", "1+1+1"]),
        (Ob, 4, &["4"]),
        (Ob, 5, &["4+1", "2+1+1+1", "1+1+1+1+1"]),
        (St, 1, &["1"]),
        (St, 2, &["2"]),
        (St, 3, &["3", "2+1"]),
        (St, 4, &["4"]),
        (St, 5, &["5", "3+2", "4+1", "2+1+1+1"]),
        (St, 6, &["6", "4+2"]),
        (
            St,
            7,
            &["7", "4+3", "5+2", "6+1", "4+2+1", "3+2+1+1", "4+1+1+1"],
        ),
        (St, 8, &["8"]),
        (Spa, 1, &[]),
        (Spa, 2, &[]),
        (Spa, 3, &["3"]),
        (Spa, 4, &[]),
        (Spa, 5, &["5"]),
        (Spa, 6, &["6"]),
        (Spa, 7, &["7"]),
        (Spa, 8, &[]),
        (Spa, 9, &["9", "6+1+1+1"]),
        (Spa, 10, &["10"]),
        (Spa, 11, &["11", "6+3+1+1"]),
        (Spa, 12, &["12"]),
        (Spa, 13, &["13", "6+5+1+1", "10+1+1+1"]),
        (Spa, 14, &["14"]),
        (
            Spa,
            15,
            &["15", "7+6+1+1", "10+3+1+1", "10+3+1+1", "12+1+1+1"],
        ),
        (Spa, 16, &[]),
        (SpaPrime, 1, &["1"]),
        (SpaPrime, 2, &["2"]),
        (SpaPrime, 3, &["3"]),
        (SpaPrime, 4, &["4"]),
        (SpaPrime, 5, &["5", "2+1+1+1"]),
        (SpaPrime, 6, &["6"]),
        (SpaPrime, 7, &["7", "3+2+1+1", "4+1+1+1"]),
        (SpaPrime, 8, &["8"]),
        (SpaPrime, 9, &["9", "4+3+1+1", "5+2+1+1", "6+1+1+1"]),
        (SpaPrime, 10, &["10", "4+2+2+2"]),
        (
            SpaPrime,
            11,
            &["11", "5+4+1+1", "6+3+1+1", "7+2+1+1", "8+1+1+1"],
        ),
        (SpaPrime, 12, &["12"]),
        (Sp, 1, &["1"]),
        (Sp, 2, &["2"]),
        (Sp, 3, &["3", "2+1", "1+1+1"]),
        (Sp, 4, &["4"]),
        (Sp, 5, &["5", "4+1", "3+1+1", "2+1+1+1", "1+1+1+1+1"]),
        (Sp, 6, &["6", "4+2", "2+2+2"]),
        (
            Sp,
            7,
            &[
                "7",
                "5+2",
                "3+2+2",
                "6+1",
                "4+2+1",
                "2+2+2+1",
                "5+1+1",
                "4+1+1+1",
                "3+1+1+1+1",
                "2+1+1+1+1+1",
                "1+1+1+1+1+1+1",
            ],
        ),
        (Sp, 8, &["8"]),
        (Snc, 1, &["1"]),
        (Snc, 2, &["2"]),
        (Snc, 3, &["2+1", "3"]),
        (Snc, 4, &["4"]),
        (Snc, 5, &["4+1", "3+2"]),
        (Snc, 6, &["4+2", "6"]),
        (Snc, 7, &["4+2+1", "6+1", "4+3"]),
        (Snc, 8, &["8"]),
        (Snc, 9, &["8+1", "4+3+2", "6+3"]),
        (Snc, 10, &["8+2", "6+4"]),
        (Snc, 11, &["8+2+1", "6+4+1", "8+3"]),
        (Snc, 12, &["8+4", "12"]),
        (Dsf, 1, &[]),
        (Dsf, 2, &[]),
        (Dsf, 3, &["2+1"]),
        (Dsf, 4, &[]),
        (Dsf, 5, &["3+2"]),
        (Dsf, 6, &["4+2"]),
        (Dsf, 7, &["5+2", "4+2+1"]),
        (Dsf, 8, &[]),
        (Dsf, 9, &["7+2", "4+3+2"]),
        (Dsf, 10, &["6+4"]),
        (Dsf, 11, &["9+2", "5+4+2", "6+4+1"]),
        (Dsf, 12, &["8+4"]),
        (Sl, 2, &["2"]),
        (Sl, 3, &["3", "2+1", "1+1+1"]),
        (Sl, 4, &["4"]),
        (Sl, 5, &["4+1", "3+1+1", "2+1+1+1", "1+1+1+1+1"]),
        (Sl, 6, &["4+2", "2+2+2"]),
        (
            Sl,
            7,
            &[
                "6+1",
                "4+2+1",
                "2+2+2+1",
                "4+1+1+1",
                "3+1+1+1+1",
                "2+1+1+1+1+1",
                "1+1+1+1+1+1+1",
            ],
        ),
        (Sl, 8, &["8"]),
        (Hb, 0, &["()"]),
        (Hb, 1, &["1"]),
        (Hb, 2, &["2", "1+1"]),
        (Hb, 3, &["2+1"]),
        (Hb, 4, &["4", "2+2", "2+1+1"]),
        (Hb, 5, &["4+1", "2+2+1"]),
        (Hb, 6, &["4+2", "4+1+1", "2+2+1+1"]),
        (Hb, 7, &["4+2+1"]),
        (Hb, 8, &["8", "4+4", "4+2+2", "4+2+1+1"]),
        (Hb, 9, &["8+1", "4+4+1", "4+2+2+1"]),
        (Sb, 1, &["1"]),
        (Sb, 2, &["2"]),
        (Sb, 3, &["3", "2+1"]),
        (Sb, 4, &["4"]),
        (Sb, 5, &["5", "3+2", "4+1"]),
        (Sb, 6, &["6", "4+2"]),
        (Sb, 7, &["7", "6+1", "4+2+1"]),
        (Sb, 8, &["8"]),
        (Sb, 9, &["9", "5+4", "7+2", "8+1"]),
        (Sb, 10, &["10", "6+4", "8+2"]),
    ];

    /// Members missing from a printed row. SL(6) = 2·SL(3) and the printed count
    /// table gives sl(6) = 3, but the printed row lists only two partitions.
    pub const MISSING_FROM_PRINT: &[(FamilyId, u64, &str)] = &[(Sl, 6, "6")];
}
