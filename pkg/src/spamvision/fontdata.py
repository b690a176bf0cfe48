"""Embedded 8x16 bitmap font (generated by tools/make_font_table.py).

Each glyph is 16 row bytes, bit 7 = leftmost column. Ink always spans
columns 0..5; columns 6..7 are blank right bearing. Homoglyph
codepoints map onto their Latin partner's bitmap, bit for bit.
"""

CELL_WIDTH = 8
CELL_HEIGHT = 16
INK_WIDTH = 6

REPLACEMENT_CODEPOINT = 0x25a1

HOMOGLYPH_TO_LATIN = {
    0x03bd: 118,  # ν -> v
    0x03bf: 111,  # ο -> o
    0x0430: 97,  # а -> a
    0x0435: 101,  # е -> e
    0x043e: 111,  # о -> o
    0x0440: 112,  # р -> p
    0x0441: 99,  # с -> c
    0x0443: 121,  # у -> y
    0x0445: 120,  # х -> x
}

# codepoint -> 16 row bytes, hex encoded
GLYPH_ROWS = {
    32: "00000000000000000000000000000000",  # U+0020
    33: "00fcfcfcfcfcfcfce00000fcfcfc0000",  # !
    34: "ccfccc00000000000000000000000000",  # "
    35: "00047c7c28282828fc30305050500000",  # #
    36: "0000c0c0808070701804048484780000",  # $
    37: "006080806c6c10105c141414141c0000",  # %
    38: "0038202020204040d0cccc4c4c340000",  # &
    39: "1c1c38e0000000000000000000000000",  # '
    40: "1cfce0e0e0e0e0e0e0e0e0fcfc1c1c00",  # (
    41: "c0300c0c0c0c0c0c0c0c0c303030c000",  # )
    42: "00003c3c3c3cc0c00000000000000000",  # *
    43: "000020202020fcfc2020202020000000",  # +
    44: "0000000000000000000000fcfcfce0e0",  # ,
    45: "00000000000000fc84fc000000000000",  # -
    46: "000000000000000000000078fc780000",  # .
    47: "000c080810101010202020404040c080",  # /
    48: "00788c8c8484b4b4848c8cc8c8780000",  # 0
    49: "00f01010101010101010101010fc0000",  # 1
    50: "00700c0c08081818306060c0c0fc0000",  # 2
    51: "00700c0c080878780804048c8c780000",  # 3
    52: "001828284848484888fcfc0808080000",  # 4
    53: "00f88080f0f008080c0c0c8888700000",  # 5
    54: "00388080b8b8cccc848484cccc780000",  # 6
    55: "00fc0808181810101020202020600000",  # 7
    56: "00788c8cc8c87878cc8484cccc780000",  # 8
    57: "00788c8c8c8ccccc7c0c0c0808700000",  # 9
    58: "000000000078fc00000078fc00000000",  # :
    59: "00000000000078fc000078fc38700000",  # ;
    60: "000004043838c0c0c038380404000000",  # <
    61: "00000000fcfc000000fcfc0000000000",  # =
    62: "0000808070700c0c0c70708080000000",  # >
    63: "00fc04041c1c38382000002020200000",  # ?
    64: "001c40408c8c90909090908c8c40201c",  # @
    65: "0018383824242424647c7c4040c00000",  # A
    66: "00f884848c8cf8f88c84848c8cf80000",  # B
    67: "0038c0c08080808080c0c04444380000",  # C
    68: "00f08c8c84848484848c8c8888f00000",  # D
    69: "00fcc0c0c0c0fcfcc0c0c0c0c0fc0000",  # E
    70: "00fcc0c0c0c0fcfcc0c0c0c0c0c00000",  # F
    71: "0038808080809c9c848484c4c4780000",  # G
    72: "008484848484fcfc8484848484840000",  # H
    73: "00fc3030303030303030303030fc0000",  # I
    74: "003c040404040404040404ccccf80000",  # J
    75: "00849090e0e0f0f09088888c8c840000",  # K
    76: "00c0c0c0c0c0c0c0c0c0c0c0c0fc0000",  # L
    77: "008ccccc9494b4b4b484848484840000",  # M
    78: "00c4e4e4a4a4a4a4949c9c8c8c8c0000",  # N
    79: "0078848484848484848484c8c8780000",  # O
    80: "00f8c4c4c4c4ccccf8c0c0c0c0c00000",  # P
    81: "0078848484848484848484c8c8780808",  # Q
    82: "00f88c8c8888f0f0888c8c8484840000",  # R
    83: "00788080c0c078780c04048c8c780000",  # S
    84: "00fc1010101010101010101010100000",  # T
    85: "0084848484848484848484cccc780000",  # U
    86: "00848c8cc8c848484850503030300000",  # V
    87: "0080c4c454545454546c6c6c6c680000",  # W
    88: "00402424181818183824244444c00000",  # X
    89: "00844848707030303030303030300000",  # Y
    90: "00fc080810103030204040c0c0fc0000",  # Z
    91: "fcc0c0c0c0c0c0c0c0c0c0c0c0c0fc00",  # [
    92: "0080404040402020201010101008080c",  # \
    93: "fc0c0c0c0c0c0c0c0c0c0c0c0c0cfc00",  # ]
    94: "78cc8400000000000000000000000000",  # ^
    95: "00000000000000000000000000fcccfc",  # _
    96: "e07c0000000000000000000000000000",  # `
    97: "00007878888804047c8c8c8c8c7c0000",  # a
    98: "8080f8f8ccccc4c484c4c4ccccf80000",  # b
    99: "00001c1c2020e0e0e0e0e020201c0000",  # c
    100: "0c0c7c7ccccc8c8c8c8c8ccccc7c0000",  # d
    101: "00007878cccc8484fc8080c4c4780000",  # e
    102: "1c20fcfc202020202020202020200000",  # f
    103: "00007c7ccccc8c8c8c8c8ccccc7c0808",  # g
    104: "8080f8f8c8c88c8c8c8c8c8c8c8c0000",  # h
    105: "30007070303030303030303030fc0000",  # i
    106: "0c00fcfc0c0c0c0c0c0c0c0c0c0c0c3c",  # j
    107: "c0c0ccccd8d8f0f0f0d8d8ccccc40000",  # k
    108: "e02020202020202020202020201c0000",  # l
    109: "0000ececb4b4a4a4a4a4a4a4a4a40000",  # m
    110: "0000f8f8c8c88c8c8c8c8c8c8c8c0000",  # n
    111: "00007878c8c88484848484c8c8780000",  # o
    112: "0000f8f8ccccc4c484c4c4ccccf88080",  # p
    113: "00007c7ccccc8c8c8c8c8ccccc7c0404",  # q
    114: "0000fcfce0e0e0e0c0c0c0c0c0c00000",  # r
    115: "00003838e4e4e0e03c0404c4c43c0000",  # s
    116: "0020fcfc2020202020202020203c0000",  # t
    117: "00008c8c8c8c8c8c8c8c8ccccc7c0000",  # u
    118: "000084848c8c48484858583030300000",  # v
    119: "00008080848454545454546c6c280000",  # w
    120: "00008c8c484830303070704848840000",  # x
    121: "00008484848448484878783030302020",  # y
    122: "0000fcfc080810103060604040fc0000",  # z
    123: "0c181010f0f010101818181818180c00",  # {
    124: "fcfcfcfcfcfcfcfcfcfcfcfcfcfcfcfc",  # |
    125: "f01018180c0c1818181010101010f000",  # }
    126: "00000000000000cc7800000000000000",  # ~
    9633: "0000fc84848484848484848484fc0000",  # U+25A1
}
