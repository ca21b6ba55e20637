//! Published counts used by `verify`: whole families, pattern-avoiding
//! classes over the generic base, and over the block-aligned base.

use crate::rect_tree::Base;

#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    /// Pattern numbers, `1..=8`.
    pub avoid: &'static [usize],
    /// Counts for `n = 1, 2, ...`.
    pub counts: &'static [u64],
}

#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub name: &'static str,
    pub base: Base,
    pub avoid: &'static [usize],
    pub counts: &'static [u64],
}

pub const FAMILIES: &[Family] = &[
    Family {
        name: "generic",
        base: Base::Generic,
        avoid: &[],
        counts: &[1, 2, 6, 24, 116, 642, 3938, 26194],
    },
    Family {
        name: "diagonal",
        base: Base::Diagonal,
        avoid: &[],
        counts: &[1, 2, 6, 22, 92, 422, 2074, 10754],
    },
    Family {
        name: "1-sided",
        base: Base::Generic,
        avoid: &[3, 4, 5, 6],
        counts: &[1, 2, 6, 20, 72, 274, 1088, 4470],
    },
    Family {
        name: "block-aligned",
        base: Base::BlockAligned,
        avoid: &[],
        counts: &[1, 1, 2, 6, 22, 88, 374, 1668, 7744],
    },
    Family {
        name: "guillotine generic",
        base: Base::Generic,
        avoid: &[1, 2],
        counts: &[1, 2, 6, 24, 114, 606, 3494, 21434],
    },
    Family {
        name: "guillotine diagonal",
        base: Base::Diagonal,
        avoid: &[1, 2],
        counts: &[1, 2, 6, 22, 90, 394, 1806, 8558],
    },
    Family {
        name: "guillotine 1-sided",
        base: Base::Generic,
        avoid: &[1, 2, 3, 4, 5, 6],
        counts: &[1, 2, 6, 20, 70, 254, 948, 3618],
    },
    Family {
        name: "guillotine 1-sided, no H",
        base: Base::Generic,
        avoid: &[1, 2, 3, 4, 5, 6, 7, 8],
        counts: &[1, 2, 6, 20, 68, 232, 792, 2704],
    },
    Family {
        name: "guillotine block-aligned",
        base: Base::BlockAligned,
        avoid: &[1, 2],
        counts: &[1, 1, 2, 6, 20, 70, 254, 948, 3618],
    },
];

pub const GENERIC_BASE: &[TableRow] = &[
    TableRow {
        avoid: &[],
        counts: &[
            1, 2, 6, 24, 116, 642, 3938, 26194, 186042, 1395008, 10948768, 89346128,
        ],
    },
    TableRow {
        avoid: &[1],
        counts: &[
            1, 2, 6, 24, 115, 624, 3712, 23704, 160140, 1132628, 8321372, 63129494,
        ],
    },
    TableRow {
        avoid: &[3],
        counts: &[
            1, 2, 6, 23, 104, 530, 2958, 17734, 112657, 750726, 5207910, 37387881,
        ],
    },
    TableRow {
        avoid: &[7],
        counts: &[
            1, 2, 6, 24, 115, 619, 3607, 22265, 143667, 960854, 6622454, 46841852,
        ],
    },
    TableRow {
        avoid: &[1, 2],
        counts: &[
            1, 2, 6, 24, 114, 606, 3494, 21434, 138100, 926008, 6418576, 45755516,
        ],
    },
    TableRow {
        avoid: &[1, 3],
        counts: &[
            1, 2, 6, 23, 103, 514, 2779, 15983, 96557, 607174, 3947335, 26393968,
        ],
    },
    TableRow {
        avoid: &[1, 4],
        counts: &[
            1, 2, 6, 23, 103, 514, 2779, 15983, 96557, 607174, 3947335, 26393968,
        ],
    },
    TableRow {
        avoid: &[1, 7],
        counts: &[
            1, 2, 6, 24, 114, 601, 3391, 20070, 123156, 777836, 5031860, 33225018,
        ],
    },
    TableRow {
        avoid: &[3, 4],
        counts: &[
            1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240, 1882960, 11140560,
        ],
    },
    TableRow {
        avoid: &[3, 5],
        counts: &[
            1, 2, 6, 22, 94, 450, 2349, 13128, 77533, 479250, 3077864, 20421177,
        ],
    },
    TableRow {
        avoid: &[3, 6],
        counts: &[
            1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240, 1882960, 11140560,
        ],
    },
    TableRow {
        avoid: &[3, 7],
        counts: &[
            1, 2, 6, 23, 103, 514, 2779, 15987, 96664, 608933, 3970441, 26661194,
        ],
    },
    TableRow {
        avoid: &[3, 8],
        counts: &[
            1, 2, 6, 23, 103, 507, 2641, 14245, 78619, 441174, 2508688, 14429287,
        ],
    },
    TableRow {
        avoid: &[7, 8],
        counts: &[
            1, 2, 6, 24, 114, 596, 3276, 18396, 103718, 581636, 3229888, 17730584,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3],
        counts: &[
            1, 2, 6, 23, 102, 498, 2606, 14378, 82725, 492520, 3017043, 18933201,
        ],
    },
    TableRow {
        avoid: &[1, 2, 7],
        counts: &[
            1, 2, 6, 24, 113, 583, 3183, 18077, 105813, 634838, 3889236, 24262094,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4],
        counts: &[
            1, 2, 6, 22, 91, 408, 1938, 9614, 49335, 260130, 1402440, 7702632,
        ],
    },
    TableRow {
        avoid: &[1, 3, 5],
        counts: &[
            1, 2, 6, 22, 93, 436, 2209, 11889, 67159, 394692, 2397407, 14974319,
        ],
    },
    TableRow {
        avoid: &[1, 3, 6],
        counts: &[
            1, 2, 6, 22, 91, 408, 1938, 9614, 49335, 260130, 1402440, 7702632,
        ],
    },
    TableRow {
        avoid: &[1, 3, 7],
        counts: &[
            1, 2, 6, 23, 102, 498, 2605, 14362, 82567, 491285, 3008821, 18886524,
        ],
    },
    TableRow {
        avoid: &[1, 3, 8],
        counts: &[
            1, 2, 6, 23, 102, 491, 2472, 12763, 66908, 354396, 1892049, 10169071,
        ],
    },
    TableRow {
        avoid: &[1, 4, 5],
        counts: &[
            1, 2, 6, 22, 91, 408, 1938, 9614, 49335, 260130, 1402440, 7702632,
        ],
    },
    TableRow {
        avoid: &[1, 4, 7],
        counts: &[
            1, 2, 6, 23, 102, 491, 2472, 12763, 66908, 354396, 1892049, 10169071,
        ],
    },
    TableRow {
        avoid: &[1, 4, 8],
        counts: &[
            1, 2, 6, 23, 102, 498, 2605, 14362, 82567, 491285, 3008821, 18886524,
        ],
    },
    TableRow {
        avoid: &[1, 7, 8],
        counts: &[
            1, 2, 6, 24, 113, 578, 3070, 16496, 88378, 468780, 2455332, 12694892,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5],
        counts: &[
            1, 2, 6, 21, 82, 346, 1547, 7236, 35090, 175268, 897273, 4690392,
        ],
    },
    TableRow {
        avoid: &[3, 4, 7],
        counts: &[
            1, 2, 6, 22, 91, 406, 1905, 9264, 46288, 236364, 1229209, 6494549,
        ],
    },
    TableRow {
        avoid: &[3, 5, 7],
        counts: &[
            1, 2, 6, 22, 93, 439, 2257, 12407, 71963, 436176, 2742686, 17791880,
        ],
    },
    TableRow {
        avoid: &[3, 5, 8],
        counts: &[
            1, 2, 6, 22, 93, 427, 2044, 9975, 49089, 242458, 1199855, 5947447,
        ],
    },
    TableRow {
        avoid: &[3, 6, 7],
        counts: &[
            1, 2, 6, 22, 91, 406, 1905, 9264, 46288, 236364, 1229209, 6494549,
        ],
    },
    TableRow {
        avoid: &[3, 7, 8],
        counts: &[
            1, 2, 6, 23, 102, 491, 2462, 12534, 63842, 322875, 1615726, 7990347,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4],
        counts: &[
            1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 5],
        counts: &[
            1, 2, 6, 22, 92, 422, 2073, 10738, 58029, 324648, 1869482, 11031813,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 6],
        counts: &[
            1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 7],
        counts: &[
            1, 2, 6, 23, 101, 482, 2437, 12877, 70514, 397823, 2302074, 13614952,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 8],
        counts: &[
            1, 2, 6, 23, 101, 475, 2309, 11409, 56879, 285220, 1436772, 7267279,
        ],
    },
    TableRow {
        avoid: &[1, 2, 7, 8],
        counts: &[
            1, 2, 6, 24, 112, 560, 2872, 14780, 75512, 381320, 1901292, 9366128,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5],
        counts: &[
            1, 2, 6, 21, 81, 334, 1446, 6498, 30074, 142556, 689248, 3388453,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 6],
        counts: &[
            1, 2, 6, 21, 81, 334, 1446, 6498, 30074, 142556, 689248, 3388453,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 7],
        counts: &[
            1, 2, 6, 22, 90, 392, 1774, 8236, 38961, 187093, 909961, 4475961,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 8],
        counts: &[
            1, 2, 6, 22, 90, 392, 1774, 8236, 38961, 187093, 909961, 4475961,
        ],
    },
    TableRow {
        avoid: &[1, 3, 5, 7],
        counts: &[
            1, 2, 6, 22, 92, 425, 2119, 11210, 62164, 358200, 2130760, 13019572,
        ],
    },
    TableRow {
        avoid: &[1, 3, 5, 8],
        counts: &[
            1, 2, 6, 22, 92, 413, 1914, 8981, 42310, 199500, 940788, 4437867,
        ],
    },
    TableRow {
        avoid: &[1, 3, 6, 7],
        counts: &[
            1, 2, 6, 22, 90, 392, 1774, 8236, 38961, 187093, 909961, 4475961,
        ],
    },
    TableRow {
        avoid: &[1, 3, 7, 8],
        counts: &[
            1, 2, 6, 23, 101, 475, 2298, 11178, 54030, 258192, 1217964, 5673144,
        ],
    },
    TableRow {
        avoid: &[1, 4, 5, 7],
        counts: &[
            1, 2, 6, 22, 90, 392, 1774, 8236, 38961, 187093, 909961, 4475961,
        ],
    },
    TableRow {
        avoid: &[1, 4, 7, 8],
        counts: &[
            1, 2, 6, 23, 101, 475, 2298, 11178, 54030, 258192, 1217964, 5673144,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5, 6],
        counts: &[
            1, 2, 6, 20, 72, 274, 1088, 4470, 18884, 81652, 360054, 1614618,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5, 7],
        counts: &[
            1, 2, 6, 21, 81, 335, 1461, 6643, 31235, 150960, 746522, 3764017,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5, 8],
        counts: &[
            1, 2, 6, 21, 81, 330, 1386, 5925, 25614, 111638, 489937, 2164127,
        ],
    },
    TableRow {
        avoid: &[3, 4, 7, 8],
        counts: &[
            1, 2, 6, 22, 90, 390, 1736, 7794, 34926, 155340, 683920, 2977794,
        ],
    },
    TableRow {
        avoid: &[3, 5, 7, 8],
        counts: &[
            1, 2, 6, 22, 92, 416, 1952, 9270, 43986, 207340, 968862, 4486184,
        ],
    },
    TableRow {
        avoid: &[3, 6, 7, 8],
        counts: &[
            1, 2, 6, 22, 90, 390, 1736, 7794, 34926, 155340, 683920, 2977794,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5],
        counts: &[
            1, 2, 6, 21, 80, 322, 1347, 5798, 25512, 114236, 518848, 2384538,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 7],
        counts: &[
            1, 2, 6, 22, 89, 378, 1647, 7286, 32574, 146866, 667088, 3050619,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 5, 7],
        counts: &[
            1, 2, 6, 22, 91, 411, 1985, 10099, 53547, 293602, 1655170, 9551440,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 5, 8],
        counts: &[
            1, 2, 6, 22, 91, 399, 1788, 8057, 36291, 163158, 732385, 3285369,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 6, 7],
        counts: &[
            1, 2, 6, 22, 89, 378, 1647, 7286, 32574, 146866, 667088, 3050619,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 7, 8],
        counts: &[
            1, 2, 6, 23, 100, 459, 2140, 9944, 45676, 206855, 923746, 4073045,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5, 6],
        counts: &[
            1, 2, 6, 20, 71, 264, 1018, 4042, 16438, 68196, 287724, 1231514,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5, 7],
        counts: &[
            1, 2, 6, 21, 80, 323, 1362, 5941, 26628, 122036, 569781, 2702496,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5, 8],
        counts: &[
            1, 2, 6, 21, 80, 318, 1290, 5287, 21803, 90351, 376174, 1573975,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 6, 7],
        counts: &[
            1, 2, 6, 21, 80, 318, 1290, 5287, 21803, 90351, 376174, 1573975,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 6, 8],
        counts: &[
            1, 2, 6, 21, 80, 323, 1362, 5941, 26628, 122036, 569781, 2702496,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 7, 8],
        counts: &[
            1, 2, 6, 22, 89, 376, 1610, 6878, 29094, 121498, 500688, 2037758,
        ],
    },
    TableRow {
        avoid: &[1, 3, 5, 7, 8],
        counts: &[
            1, 2, 6, 22, 91, 402, 1824, 8318, 37750, 169880, 757488, 3348274,
        ],
    },
    TableRow {
        avoid: &[1, 3, 6, 7, 8],
        counts: &[
            1, 2, 6, 22, 89, 376, 1610, 6878, 29094, 121498, 500688, 2037758,
        ],
    },
    TableRow {
        avoid: &[1, 4, 5, 7, 8],
        counts: &[
            1, 2, 6, 22, 89, 376, 1610, 6878, 29094, 121498, 500688, 2037758,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5, 6, 7],
        counts: &[
            1, 2, 6, 20, 71, 263, 1006, 3949, 15839, 64700, 268477, 1129385,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5, 7, 8],
        counts: &[
            1, 2, 6, 21, 80, 319, 1300, 5340, 21946, 89909, 366626, 1487463,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5, 6],
        counts: &[
            1, 2, 6, 20, 70, 254, 948, 3618, 14058, 55432, 221262, 892346,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5, 7],
        counts: &[
            1, 2, 6, 21, 79, 311, 1265, 5275, 22431, 96900, 424068, 1876143,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5, 8],
        counts: &[
            1, 2, 6, 21, 79, 306, 1196, 4681, 18308, 71564, 279820, 1095533,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 7, 8],
        counts: &[
            1, 2, 6, 22, 88, 362, 1488, 6034, 24024, 93830, 359824, 1357088,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 5, 7, 8],
        counts: &[
            1, 2, 6, 22, 90, 388, 1700, 7434, 32212, 138040, 585246, 2457712,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 6, 7, 8],
        counts: &[
            1, 2, 6, 22, 88, 362, 1488, 6034, 24024, 93830, 359824, 1357088,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5, 6, 7],
        counts: &[
            1, 2, 6, 20, 70, 253, 938, 3553, 13708, 53736, 213588, 859335,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5, 7, 8],
        counts: &[
            1, 2, 6, 21, 79, 307, 1206, 4738, 18532, 72070, 278718, 1072739,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 6, 7, 8],
        counts: &[
            1, 2, 6, 21, 79, 307, 1206, 4738, 18532, 72070, 278718, 1072739,
        ],
    },
    TableRow {
        avoid: &[3, 4, 5, 6, 7, 8],
        counts: &[
            1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756, 705432,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5, 6, 7],
        counts: &[
            1, 2, 6, 20, 69, 243, 870, 3159, 11611, 43130, 161691, 611065,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5, 7, 8],
        counts: &[
            1, 2, 6, 21, 78, 295, 1114, 4166, 15390, 56167, 202738, 724813,
        ],
    },
    TableRow {
        avoid: &[1, 3, 4, 5, 6, 7, 8],
        counts: &[
            1, 2, 6, 20, 69, 242, 858, 3068, 11050, 40052, 145996, 534888,
        ],
    },
    TableRow {
        avoid: &[1, 2, 3, 4, 5, 6, 7, 8],
        counts: &[1, 2, 6, 20, 68, 232, 792, 2704, 9232, 31520, 107616, 367424],
    },
];

pub const BLOCK_BASE: &[TableRow] = &[
    TableRow {
        avoid: &[],
        counts: &[
            1, 1, 2, 6, 22, 88, 374, 1668, 7744, 37182, 183666, 929480, 4803018,
        ],
    },
    TableRow {
        avoid: &[1],
        counts: &[
            1, 1, 2, 6, 21, 79, 312, 1280, 5416, 23506, 104198, 470192, 2154204,
        ],
    },
    TableRow {
        avoid: &[1, 2],
        counts: &[
            1, 1, 2, 6, 20, 70, 254, 948, 3618, 14058, 55432, 221262, 892346,
        ],
    },
];
