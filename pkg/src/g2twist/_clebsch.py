"""Igusa-Clebsch invariants of the binary sextic as integer polynomials.

Each entry maps a name to ``(exponents, coefficient)`` terms in a0..a6, where
P(x) = a0*x^6 + a1*x^5 + ... + a6.  Generated by exact interpolation against the
root formulas (see ``tests/test_invariants.py`` for the independent check).
"""

I2_TERMS: tuple[tuple[tuple[int, ...], int], ...] = (
    ((0, 0, 0, 2, 0, 0, 0), 6),
    ((0, 0, 1, 0, 1, 0, 0), -16),
    ((0, 1, 0, 0, 0, 1, 0), 40),
    ((1, 0, 0, 0, 0, 0, 1), -240),
)

I4_TERMS: tuple[tuple[tuple[int, ...], int], ...] = (
    ((0, 0, 2, 0, 2, 0, 0), 4),
    ((0, 0, 2, 1, 0, 1, 0), -12),
    ((0, 0, 3, 0, 0, 0, 1), 48),
    ((0, 1, 0, 1, 2, 0, 0), -12),
    ((0, 1, 0, 2, 0, 1, 0), 36),
    ((0, 1, 1, 0, 1, 1, 0), 4),
    ((0, 1, 1, 1, 0, 0, 1), -180),
    ((0, 2, 0, 0, 0, 2, 0), -80),
    ((0, 2, 0, 0, 1, 0, 1), 300),
    ((1, 0, 0, 0, 3, 0, 0), 48),
    ((1, 0, 0, 1, 1, 1, 0), -180),
    ((1, 0, 0, 2, 0, 0, 1), 324),
    ((1, 0, 1, 0, 0, 2, 0), 300),
    ((1, 0, 1, 0, 1, 0, 1), -504),
    ((1, 1, 0, 0, 0, 1, 1), -540),
    ((2, 0, 0, 0, 0, 0, 2), 1620),
)

I6_TERMS: tuple[tuple[tuple[int, ...], int], ...] = (
    ((0, 0, 2, 2, 2, 0, 0), 8),
    ((0, 0, 2, 3, 0, 1, 0), -24),
    ((0, 0, 3, 0, 3, 0, 0), -24),
    ((0, 0, 3, 1, 1, 1, 0), 76),
    ((0, 0, 3, 2, 0, 0, 1), 60),
    ((0, 0, 4, 0, 0, 2, 0), -36),
    ((0, 0, 4, 0, 1, 0, 1), -160),
    ((0, 1, 0, 3, 2, 0, 0), -24),
    ((0, 1, 0, 4, 0, 1, 0), 72),
    ((0, 1, 1, 1, 3, 0, 0), 76),
    ((0, 1, 1, 2, 1, 1, 0), -238),
    ((0, 1, 1, 3, 0, 0, 1), -198),
    ((0, 1, 2, 0, 2, 1, 0), 28),
    ((0, 1, 2, 1, 0, 2, 0), 26),
    ((0, 1, 2, 1, 1, 0, 1), 492),
    ((0, 1, 3, 0, 0, 1, 1), 616),
    ((0, 2, 0, 0, 4, 0, 0), -36),
    ((0, 2, 0, 1, 2, 1, 0), 26),
    ((0, 2, 0, 2, 0, 2, 0), 176),
    ((0, 2, 0, 2, 1, 0, 1), 330),
    ((0, 2, 1, 0, 1, 2, 0), 64),
    ((0, 2, 1, 0, 2, 0, 1), -640),
    ((0, 2, 1, 1, 0, 1, 1), -1860),
    ((0, 2, 2, 0, 0, 0, 2), -900),
    ((0, 3, 0, 0, 0, 3, 0), -320),
    ((0, 3, 0, 0, 1, 1, 1), 1600),
    ((0, 3, 0, 1, 0, 0, 2), 2250),
    ((1, 0, 0, 2, 3, 0, 0), 60),
    ((1, 0, 0, 3, 1, 1, 0), -198),
    ((1, 0, 0, 4, 0, 0, 1), 162),
    ((1, 0, 1, 0, 4, 0, 0), -160),
    ((1, 0, 1, 1, 2, 1, 0), 492),
    ((1, 0, 1, 2, 0, 2, 0), 330),
    ((1, 0, 1, 2, 1, 0, 1), -468),
    ((1, 0, 2, 0, 1, 2, 0), -640),
    ((1, 0, 2, 0, 2, 0, 1), 424),
    ((1, 0, 2, 1, 0, 1, 1), -876),
    ((1, 0, 3, 0, 0, 0, 2), -96),
    ((1, 1, 0, 0, 3, 1, 0), 616),
    ((1, 1, 0, 1, 1, 2, 0), -1860),
    ((1, 1, 0, 1, 2, 0, 1), -876),
    ((1, 1, 0, 2, 0, 1, 1), 1818),
    ((1, 1, 1, 0, 0, 3, 0), 1600),
    ((1, 1, 1, 0, 1, 1, 1), 3472),
    ((1, 1, 1, 1, 0, 0, 2), 3060),
    ((1, 2, 0, 0, 0, 2, 1), -2240),
    ((1, 2, 0, 0, 1, 0, 2), -18600),
    ((2, 0, 0, 0, 2, 2, 0), -900),
    ((2, 0, 0, 0, 3, 0, 1), -96),
    ((2, 0, 0, 1, 0, 3, 0), 2250),
    ((2, 0, 0, 1, 1, 1, 1), 3060),
    ((2, 0, 0, 2, 0, 0, 2), -10044),
    ((2, 0, 1, 0, 0, 2, 1), -18600),
    ((2, 0, 1, 0, 1, 0, 2), 20664),
    ((2, 1, 0, 0, 0, 1, 2), 59940),
    ((3, 0, 0, 0, 0, 0, 3), -119880),
)

I10_TERMS: tuple[tuple[tuple[int, ...], int], ...] = (
    ((0, 2, 2, 2, 2, 2, 0), 1),
    ((0, 2, 2, 2, 3, 0, 1), -4),
    ((0, 2, 2, 3, 0, 3, 0), -4),
    ((0, 2, 2, 3, 1, 1, 1), 18),
    ((0, 2, 2, 4, 0, 0, 2), -27),
    ((0, 2, 3, 0, 3, 2, 0), -4),
    ((0, 2, 3, 0, 4, 0, 1), 16),
    ((0, 2, 3, 1, 1, 3, 0), 18),
    ((0, 2, 3, 1, 2, 1, 1), -80),
    ((0, 2, 3, 2, 0, 2, 1), -6),
    ((0, 2, 3, 2, 1, 0, 2), 144),
    ((0, 2, 4, 0, 0, 4, 0), -27),
    ((0, 2, 4, 0, 1, 2, 1), 144),
    ((0, 2, 4, 0, 2, 0, 2), -128),
    ((0, 2, 4, 1, 0, 1, 2), -192),
    ((0, 2, 5, 0, 0, 0, 3), 256),
    ((0, 3, 0, 3, 2, 2, 0), -4),
    ((0, 3, 0, 3, 3, 0, 1), 16),
    ((0, 3, 0, 4, 0, 3, 0), 16),
    ((0, 3, 0, 4, 1, 1, 1), -72),
    ((0, 3, 0, 5, 0, 0, 2), 108),
    ((0, 3, 1, 1, 3, 2, 0), 18),
    ((0, 3, 1, 1, 4, 0, 1), -72),
    ((0, 3, 1, 2, 1, 3, 0), -80),
    ((0, 3, 1, 2, 2, 1, 1), 356),
    ((0, 3, 1, 3, 0, 2, 1), 24),
    ((0, 3, 1, 3, 1, 0, 2), -630),
    ((0, 3, 2, 0, 2, 3, 0), -6),
    ((0, 3, 2, 0, 3, 1, 1), 24),
    ((0, 3, 2, 1, 0, 4, 0), 144),
    ((0, 3, 2, 1, 1, 2, 1), -746),
    ((0, 3, 2, 1, 2, 0, 2), 560),
    ((0, 3, 2, 2, 0, 1, 2), 1020),
    ((0, 3, 3, 0, 0, 3, 1), -36),
    ((0, 3, 3, 0, 1, 1, 2), 160),
    ((0, 3, 3, 1, 0, 0, 3), -1600),
    ((0, 4, 0, 0, 4, 2, 0), -27),
    ((0, 4, 0, 0, 5, 0, 1), 108),
    ((0, 4, 0, 1, 2, 3, 0), 144),
    ((0, 4, 0, 1, 3, 1, 1), -630),
    ((0, 4, 0, 2, 0, 4, 0), -128),
    ((0, 4, 0, 2, 1, 2, 1), 560),
    ((0, 4, 0, 2, 2, 0, 2), 825),
    ((0, 4, 0, 3, 0, 1, 2), -900),
    ((0, 4, 1, 0, 1, 4, 0), -192),
    ((0, 4, 1, 0, 2, 2, 1), 1020),
    ((0, 4, 1, 0, 3, 0, 2), -900),
    ((0, 4, 1, 1, 0, 3, 1), 160),
    ((0, 4, 1, 1, 1, 1, 2), -2050),
    ((0, 4, 1, 2, 0, 0, 3), 2250),
    ((0, 4, 2, 0, 0, 2, 2), -50),
    ((0, 4, 2, 0, 1, 0, 3), 2000),
    ((0, 5, 0, 0, 0, 5, 0), 256),
    ((0, 5, 0, 0, 1, 3, 1), -1600),
    ((0, 5, 0, 0, 2, 1, 2), 2250),
    ((0, 5, 0, 1, 0, 2, 2), 2000),
    ((0, 5, 0, 1, 1, 0, 3), -3750),
    ((0, 5, 1, 0, 0, 1, 3), -2500),
    ((0, 6, 0, 0, 0, 0, 4), 3125),
    ((1, 0, 3, 2, 2, 2, 0), -4),
    ((1, 0, 3, 2, 3, 0, 1), 16),
    ((1, 0, 3, 3, 0, 3, 0), 16),
    ((1, 0, 3, 3, 1, 1, 1), -72),
    ((1, 0, 3, 4, 0, 0, 2), 108),
    ((1, 0, 4, 0, 3, 2, 0), 16),
    ((1, 0, 4, 0, 4, 0, 1), -64),
    ((1, 0, 4, 1, 1, 3, 0), -72),
    ((1, 0, 4, 1, 2, 1, 1), 320),
    ((1, 0, 4, 2, 0, 2, 1), 24),
    ((1, 0, 4, 2, 1, 0, 2), -576),
    ((1, 0, 5, 0, 0, 4, 0), 108),
    ((1, 0, 5, 0, 1, 2, 1), -576),
    ((1, 0, 5, 0, 2, 0, 2), 512),
    ((1, 0, 5, 1, 0, 1, 2), 768),
    ((1, 0, 6, 0, 0, 0, 3), -1024),
    ((1, 1, 1, 3, 2, 2, 0), 18),
    ((1, 1, 1, 3, 3, 0, 1), -72),
    ((1, 1, 1, 4, 0, 3, 0), -72),
    ((1, 1, 1, 4, 1, 1, 1), 324),
    ((1, 1, 1, 5, 0, 0, 2), -486),
    ((1, 1, 2, 1, 3, 2, 0), -80),
    ((1, 1, 2, 1, 4, 0, 1), 320),
    ((1, 1, 2, 2, 1, 3, 0), 356),
    ((1, 1, 2, 2, 2, 1, 1), -1584),
    ((1, 1, 2, 3, 0, 2, 1), -108),
    ((1, 1, 2, 3, 1, 0, 2), 2808),
    ((1, 1, 3, 0, 2, 3, 0), 24),
    ((1, 1, 3, 0, 3, 1, 1), -96),
    ((1, 1, 3, 1, 0, 4, 0), -630),
    ((1, 1, 3, 1, 1, 2, 1), 3272),
    ((1, 1, 3, 1, 2, 0, 2), -2496),
    ((1, 1, 3, 2, 0, 1, 2), -4464),
    ((1, 1, 4, 0, 0, 3, 1), 144),
    ((1, 1, 4, 0, 1, 1, 2), -640),
    ((1, 1, 4, 1, 0, 0, 3), 6912),
    ((1, 2, 0, 2, 3, 2, 0), -6),
    ((1, 2, 0, 2, 4, 0, 1), 24),
    ((1, 2, 0, 3, 1, 3, 0), 24),
    ((1, 2, 0, 3, 2, 1, 1), -108),
    ((1, 2, 0, 4, 1, 0, 2), 162),
    ((1, 2, 1, 0, 4, 2, 0), 144),
    ((1, 2, 1, 0, 5, 0, 1), -576),
    ((1, 2, 1, 1, 2, 3, 0), -746),
    ((1, 2, 1, 1, 3, 1, 1), 3272),
    ((1, 2, 1, 2, 0, 4, 0), 560),
    ((1, 2, 1, 2, 1, 2, 1), -2412),
    ((1, 2, 1, 2, 2, 0, 2), -4536),
    ((1, 2, 1, 3, 0, 1, 2), 3942),
    ((1, 2, 2, 0, 1, 4, 0), 1020),
    ((1, 2, 2, 0, 2, 2, 1), -5428),
    ((1, 2, 2, 0, 3, 0, 2), 4816),
    ((1, 2, 2, 1, 0, 3, 1), -682),
    ((1, 2, 2, 1, 1, 1, 2), 10152),
    ((1, 2, 2, 2, 0, 0, 3), -9720),
    ((1, 2, 3, 0, 0, 2, 2), 248),
    ((1, 2, 3, 0, 1, 0, 3), -10560),
    ((1, 3, 0, 0, 3, 3, 0), -36),
    ((1, 3, 0, 0, 4, 1, 1), 144),
    ((1, 3, 0, 1, 1, 4, 0), 160),
    ((1, 3, 0, 1, 2, 2, 1), -682),
    ((1, 3, 0, 1, 3, 0, 2), -120),
    ((1, 3, 0, 2, 0, 3, 1), -208),
    ((1, 3, 0, 2, 1, 1, 2), 1980),
    ((1, 3, 0, 3, 0, 0, 3), -1350),
    ((1, 3, 1, 0, 0, 5, 0), -1600),
    ((1, 3, 1, 0, 1, 3, 1), 9768),
    ((1, 3, 1, 0, 2, 1, 2), -13040),
    ((1, 3, 1, 1, 0, 2, 2), -12330),
    ((1, 3, 1, 1, 1, 0, 3), 19800),
    ((1, 3, 2, 0, 0, 1, 3), 15600),
    ((1, 4, 0, 0, 0, 4, 1), 320),
    ((1, 4, 0, 0, 1, 2, 2), -1700),
    ((1, 4, 0, 0, 2, 0, 3), 1500),
    ((1, 4, 0, 1, 0, 1, 3), 2250),
    ((1, 4, 1, 0, 0, 0, 4), -22500),
    ((2, 0, 0, 4, 2, 2, 0), -27),
    ((2, 0, 0, 4, 3, 0, 1), 108),
    ((2, 0, 0, 5, 0, 3, 0), 108),
    ((2, 0, 0, 5, 1, 1, 1), -486),
    ((2, 0, 0, 6, 0, 0, 2), 729),
    ((2, 0, 1, 2, 3, 2, 0), 144),
    ((2, 0, 1, 2, 4, 0, 1), -576),
    ((2, 0, 1, 3, 1, 3, 0), -630),
    ((2, 0, 1, 3, 2, 1, 1), 2808),
    ((2, 0, 1, 4, 0, 2, 1), 162),
    ((2, 0, 1, 4, 1, 0, 2), -4860),
    ((2, 0, 2, 0, 4, 2, 0), -128),
    ((2, 0, 2, 0, 5, 0, 1), 512),
    ((2, 0, 2, 1, 2, 3, 0), 560),
    ((2, 0, 2, 1, 3, 1, 1), -2496),
    ((2, 0, 2, 2, 0, 4, 0), 825),
    ((2, 0, 2, 2, 1, 2, 1), -4536),
    ((2, 0, 2, 2, 2, 0, 2), 8208),
    ((2, 0, 2, 3, 0, 1, 2), 5832),
    ((2, 0, 3, 0, 1, 4, 0), -900),
    ((2, 0, 3, 0, 2, 2, 1), 4816),
    ((2, 0, 3, 0, 3, 0, 2), -4352),
    ((2, 0, 3, 1, 0, 3, 1), -120),
    ((2, 0, 3, 1, 1, 1, 2), -5760),
    ((2, 0, 3, 2, 0, 0, 3), -8640),
    ((2, 0, 4, 0, 0, 2, 2), -192),
    ((2, 0, 4, 0, 1, 0, 3), 9216),
    ((2, 1, 0, 1, 4, 2, 0), -192),
    ((2, 1, 0, 1, 5, 0, 1), 768),
    ((2, 1, 0, 2, 2, 3, 0), 1020),
    ((2, 1, 0, 2, 3, 1, 1), -4464),
    ((2, 1, 0, 3, 0, 4, 0), -900),
    ((2, 1, 0, 3, 1, 2, 1), 3942),
    ((2, 1, 0, 3, 2, 0, 2), 5832),
    ((2, 1, 0, 4, 0, 1, 2), -6318),
    ((2, 1, 1, 0, 3, 3, 0), 160),
    ((2, 1, 1, 0, 4, 1, 1), -640),
    ((2, 1, 1, 1, 1, 4, 0), -2050),
    ((2, 1, 1, 1, 2, 2, 1), 10152),
    ((2, 1, 1, 1, 3, 0, 2), -5760),
    ((2, 1, 1, 2, 0, 3, 1), 1980),
    ((2, 1, 1, 2, 1, 1, 2), -22896),
    ((2, 1, 1, 3, 0, 0, 3), 21384),
    ((2, 1, 2, 0, 0, 5, 0), 2250),
    ((2, 1, 2, 0, 1, 3, 1), -13040),
    ((2, 1, 2, 0, 2, 1, 2), 15264),
    ((2, 1, 2, 1, 0, 2, 2), 16632),
    ((2, 1, 2, 1, 1, 0, 3), -3456),
    ((2, 1, 3, 0, 0, 1, 3), -21888),
    ((2, 2, 0, 0, 2, 4, 0), -50),
    ((2, 2, 0, 0, 3, 2, 1), 248),
    ((2, 2, 0, 0, 4, 0, 2), -192),
    ((2, 2, 0, 1, 0, 5, 0), 2000),
    ((2, 2, 0, 1, 1, 3, 1), -12330),
    ((2, 2, 0, 1, 2, 1, 2), 16632),
    ((2, 2, 0, 2, 0, 2, 2), 15417),
    ((2, 2, 0, 2, 1, 0, 3), -27540),
    ((2, 2, 1, 0, 0, 4, 1), -1700),
    ((2, 2, 1, 0, 1, 2, 2), 8748),
    ((2, 2, 1, 0, 2, 0, 3), -6480),
    ((2, 2, 1, 1, 0, 1, 3), -31320),
    ((2, 2, 2, 0, 0, 0, 4), 43200),
    ((2, 3, 0, 0, 0, 3, 2), 410),
    ((2, 3, 0, 0, 1, 1, 3), -1800),
    ((2, 3, 0, 1, 0, 0, 4), 27000),
    ((3, 0, 0, 0, 5, 2, 0), 256),
    ((3, 0, 0, 0, 6, 0, 1), -1024),
    ((3, 0, 0, 1, 3, 3, 0), -1600),
    ((3, 0, 0, 1, 4, 1, 1), 6912),
    ((3, 0, 0, 2, 1, 4, 0), 2250),
    ((3, 0, 0, 2, 2, 2, 1), -9720),
    ((3, 0, 0, 2, 3, 0, 2), -8640),
    ((3, 0, 0, 3, 0, 3, 1), -1350),
    ((3, 0, 0, 3, 1, 1, 2), 21384),
    ((3, 0, 0, 4, 0, 0, 3), -8748),
    ((3, 0, 1, 0, 2, 4, 0), 2000),
    ((3, 0, 1, 0, 3, 2, 1), -10560),
    ((3, 0, 1, 0, 4, 0, 2), 9216),
    ((3, 0, 1, 1, 0, 5, 0), -3750),
    ((3, 0, 1, 1, 1, 3, 1), 19800),
    ((3, 0, 1, 1, 2, 1, 2), -3456),
    ((3, 0, 1, 2, 0, 2, 2), -27540),
    ((3, 0, 1, 2, 1, 0, 3), 3888),
    ((3, 0, 2, 0, 0, 4, 1), 1500),
    ((3, 0, 2, 0, 1, 2, 2), -6480),
    ((3, 0, 2, 0, 2, 0, 3), -17280),
    ((3, 0, 2, 1, 0, 1, 3), 46656),
    ((3, 0, 3, 0, 0, 0, 4), -13824),
    ((3, 1, 0, 0, 1, 5, 0), -2500),
    ((3, 1, 0, 0, 2, 3, 1), 15600),
    ((3, 1, 0, 0, 3, 1, 2), -21888),
    ((3, 1, 0, 1, 0, 4, 1), 2250),
    ((3, 1, 0, 1, 1, 2, 2), -31320),
    ((3, 1, 0, 1, 2, 0, 3), 46656),
    ((3, 1, 0, 2, 0, 1, 3), 15552),
    ((3, 1, 1, 0, 0, 3, 2), -1800),
    ((3, 1, 1, 0, 1, 1, 3), 31968),
    ((3, 1, 1, 1, 0, 0, 4), -77760),
    ((3, 2, 0, 0, 0, 2, 3), 540),
    ((3, 2, 0, 0, 1, 0, 4), -32400),
    ((4, 0, 0, 0, 0, 6, 0), 3125),
    ((4, 0, 0, 0, 1, 4, 1), -22500),
    ((4, 0, 0, 0, 2, 2, 2), 43200),
    ((4, 0, 0, 0, 3, 0, 3), -13824),
    ((4, 0, 0, 1, 0, 3, 2), 27000),
    ((4, 0, 0, 1, 1, 1, 3), -77760),
    ((4, 0, 0, 2, 0, 0, 4), 34992),
    ((4, 0, 1, 0, 0, 2, 3), -32400),
    ((4, 0, 1, 0, 1, 0, 4), 62208),
    ((4, 1, 0, 0, 0, 1, 4), 38880),
    ((5, 0, 0, 0, 0, 0, 5), -46656),
)
