//! Published tables of the first polynomials, as printed.

/// `(P_n, Q_n)` for `n = 0..=15`.
pub const TABLE1: [(&str, &str); 16] = [
    ("1", "0"),
    ("0", "1"),
    ("x", "0"),
    ("1", "x"),
    ("x^2", "2"),
    ("4x", "x^2"),
    ("x^3+4", "6x"),
    ("9x^2", "x^3+10"),
    ("x^4+28x", "12x^2"),
    ("16x^3+28", "x^4+52x"),
    ("x^5+100x^2", "20x^3+80"),
    ("25x^4+280x", "x^5+160x^2"),
    ("x^6+260x^3+280", "30x^4+600x"),
    ("36x^5+1380x^2", "x^6+380x^3+880"),
    ("x^7+560x^4+3640x", "42x^5+2520x^2"),
    ("49x^6+4760x^3+3640", "x^7+770x^4+8680x"),
];

/// `(R_n, S_n, T_n)` for `n = 0..=12`.
pub const TABLE2: [(&str, &str, &str); 13] = [
    ("1", "0", "0"),
    ("0", "1", "0"),
    ("2x", "0", "2"),
    ("2", "4x", "0"),
    ("8x^2", "6", "8x"),
    ("28x", "16x^2", "20"),
    ("32x^3+28", "80x", "32x^2"),
    ("256x^2", "64x^3+108", "224x"),
    ("128x^4+728x", "672x^2", "128x^3+440"),
    ("1856x^3+728", "256x^4+2512x", "1728x^2"),
    ("512x^5+10592x^2", "4608x^3+3240", "512x^4+8480x"),
    ("11776x^4+27664x", "1024x^5+32896x^2", "11264x^3+14960"),
    ("2048x^6+112896x^3+27664", "28160x^4+108416x", "2048x^5+99584x^2"),
];
