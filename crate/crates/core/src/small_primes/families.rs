// Generated by scripts/gen_families.py; do not edit by hand.

use super::family::{FamilyData, Factored};

pub(super) const FAMILIES: &[FamilyData] = &[
    FamilyData {
        label: "mod2-a",
        ell: 2,
        adic_only: false,
        numerator: &[256, 768, 768, 256],
        denominator: &[0, 1],
        numerator_factored: Factored { constant: 256, factors: &[(&[1, 1], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[0, 1], 1)] },
    },
    FamilyData {
        label: "mod2-b",
        ell: 2,
        adic_only: false,
        numerator: &[1728, 0, 1],
        denominator: &[1],
        numerator_factored: Factored { constant: 1, factors: &[(&[1728, 0, 1], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "mod3-a",
        ell: 3,
        adic_only: false,
        numerator: &[19683, 26244, 7290, 756, 27],
        denominator: &[0, 0, 0, 1],
        numerator_factored: Factored { constant: 27, factors: &[(&[1, 1], 1), (&[9, 1], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[0, 1], 3)] },
    },
    FamilyData {
        label: "mod3-b",
        ell: 3,
        adic_only: false,
        numerator: &[0, 0, 0, 1],
        denominator: &[1],
        numerator_factored: Factored { constant: 1, factors: &[(&[0, 1], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "mod5-a",
        ell: 5,
        adic_only: false,
        numerator: &[3375, 13500, 6750, -13500, 21375, 27000, -30500, 16000, 18000, -16000, 8000],
        denominator: &[-1, 5, -5, -10, 15, 11, -15, -10, 5, 5, 1],
        numerator_factored: Factored { constant: 125, factors: &[(&[1, 1], 1), (&[1, 2], 3), (&[3, -3, 2], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[-1, 1, 1], 5)] },
    },
    FamilyData {
        label: "mod5-b",
        ell: 5,
        adic_only: false,
        numerator: &[3125, 18750, 39375, 32500, 7875, 750, 25],
        denominator: &[0, 0, 0, 0, 0, 1],
        numerator_factored: Factored { constant: 25, factors: &[(&[5, 10, 1], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[0, 1], 5)] },
    },
    FamilyData {
        label: "mod5-c",
        ell: 5,
        adic_only: false,
        numerator: &[0, 0, 0, 40, 5, 1],
        denominator: &[1],
        numerator_factored: Factored { constant: 1, factors: &[(&[0, 1], 3), (&[40, 5, 1], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "mod7-a",
        ell: 7,
        adic_only: false,
        numerator: &[0, 175616, -2963520, 18984168, -58148643, 91840770, -75827661, -20944902, 167532099, -262662624, 223139000, -58109436, -133819119, 237886698, -212026035, 104541150, 3362506, -60368574, 64776789, -43406706, 21198429, -7875228, 2251424, -493416, 81543, -9842, 819, -42, 1],
        denominator: &[1, 21, 161, 448, -483, -4200, 364, 20583, -9856, -60144, 88557, 25249, -203469, 286398, -233923, 129038, -50358, 14021, -2737, 357, -28, 1],
        numerator_factored: Factored { constant: 1, factors: &[(&[0, 1], 1), (&[1, 1], 3), (&[1, -5, 1], 3), (&[8, -5, 1], 3), (&[7, -7, 8, -5, 1], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[1, 3, -4, 1], 7)] },
    },
    FamilyData {
        label: "mod7-b",
        ell: 7,
        adic_only: false,
        numerator: &[0, 0, 0, -20661046784, -92974710528, -46487355264, 164919427008, -45380513472, -127286806080, 211226073408, -196769364288, 133430907456, -71374623040, 31317491520, -11433062592, 3474584512, -873448128, 178272192, -28321216, 3245760, -235200, 8000],
        denominator: &[823543, 5764801, 11529602, -4941258, -35412349, -4117715, 55530328, 941192, -56706818, 18790226, 30454284, -26420604, 1339758, 9263058, -6857256, 2697352, -687029, 119021, -14014, 1078, -49, 1],
        numerator_factored: Factored { constant: 64, factors: &[(&[0, 1], 3), (&[7, 0, 1], 3), (&[14, -7, 1], 3), (&[-7, -14, 5], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[7, 7, -7, 1], 7)] },
    },
    FamilyData {
        label: "mod7-c",
        ell: 7,
        adic_only: false,
        numerator: &[678223072849, 387556041628, 90957030178, 10976181104, 695893835, 20706224, 196882, 748, 1],
        denominator: &[0, 0, 0, 0, 0, 0, 0, 1],
        numerator_factored: Factored { constant: 1, factors: &[(&[2401, 245, 1], 3), (&[49, 13, 1], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[0, 1], 7)] },
    },
    FamilyData {
        label: "mod13",
        ell: 13,
        adic_only: false,
        numerator: &[13, 746, 15145, 124852, 354536, 534820, 509366, 333580, 157118, 54340, 13832, 2548, 325, 26, 1],
        denominator: &[0, 1],
        numerator_factored: Factored { constant: 1, factors: &[(&[13, 5, 1], 1), (&[1, 19, 20, 7, 1], 3)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[0, 1], 1)] },
    },
    FamilyData {
        label: "2adic-a",
        ell: 2,
        adic_only: true,
        numerator: &[0, 0, 0, -32, -4],
        denominator: &[1],
        numerator_factored: Factored { constant: -4, factors: &[(&[0, 1], 3), (&[8, 1], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "2adic-b",
        ell: 2,
        adic_only: true,
        numerator: &[1728, 0, -1],
        denominator: &[1],
        numerator_factored: Factored { constant: 1, factors: &[(&[1728, 0, -1], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "2adic-c",
        ell: 2,
        adic_only: true,
        numerator: &[1728, 0, 2],
        denominator: &[1],
        numerator_factored: Factored { constant: 1, factors: &[(&[1728, 0, 2], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "2adic-d",
        ell: 2,
        adic_only: true,
        numerator: &[1728, 0, -2],
        denominator: &[1],
        numerator_factored: Factored { constant: 1, factors: &[(&[1728, 0, -2], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[] },
    },
    FamilyData {
        label: "3adic",
        ell: 3,
        adic_only: true,
        numerator: &[-44789760, -127650816, 50388480, 441599040, 140877792, -683052588, -366184719, 718783794, 466697052, -579371292, -451829826, 319730652, 317110626, -116733312, -170684415, 19372446, 76133844, 15011568, -20236311, -10064574, 2952450, 3612924, 301806, -997272, -691092, -236196, -45927, -4374],
        denominator: &[-1, -27, -324, -2259, -9990, -28350, -47664, -28458, 56619, 130089, 56916, -113319, -138474, 21438, 111132, 27342, -49518, -23814, 13524, 9450, -2268, -2232, 216, 324, -9, -27, 0, 1],
        numerator_factored: Factored { constant: -2187, factors: &[(&[-1, 0, 1], 3), (&[16, 12, -3, 1, 6, 3, 1], 3), (&[-5, -3, 3, 2], 1)] },
        denominator_factored: Factored { constant: 1, factors: &[(&[-1, -3, 0, 1], 9)] },
    },
];
