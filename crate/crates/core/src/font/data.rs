// Generated by tools/gen_font.py from DejaVu Sans Mono; do not edit.
// Each glyph is a fixed cell; row bit k (LSB-first) is pixel column k.

pub const CELL_W: usize = 12;
pub const CELL_H: usize = 20;

pub const GLYPHS_NORMAL: [[u16; CELL_H]; 95] = [
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // ' '
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // '!'
    [0x000, 0x000, 0x000, 0x090, 0x090, 0x090, 0x090, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '"'
    [0x000, 0x000, 0x000, 0x000, 0x120, 0x120, 0x130, 0x7fc, 0x090, 0x090, 0x098, 0x3fe, 0x048, 0x048, 0x06c, 0x000, 0x000, 0x000, 0x000, 0x000], // '#'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x158, 0x00c, 0x008, 0x078, 0x1e0, 0x300, 0x300, 0x10c, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '$'
    [0x000, 0x000, 0x000, 0x01c, 0x026, 0x022, 0x026, 0x31c, 0x0c0, 0x030, 0x1cc, 0x240, 0x260, 0x240, 0x1c0, 0x000, 0x000, 0x000, 0x000, 0x000], // '%'
    [0x000, 0x000, 0x000, 0x0f0, 0x018, 0x008, 0x018, 0x018, 0x038, 0x264, 0x246, 0x2c6, 0x384, 0x38c, 0x3f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '&'
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // "'"
    [0x000, 0x000, 0x000, 0x0c0, 0x040, 0x060, 0x020, 0x020, 0x030, 0x030, 0x030, 0x030, 0x020, 0x020, 0x060, 0x040, 0x0c0, 0x000, 0x000, 0x000], // '('
    [0x000, 0x000, 0x000, 0x010, 0x030, 0x020, 0x060, 0x060, 0x040, 0x040, 0x040, 0x040, 0x060, 0x060, 0x020, 0x030, 0x010, 0x000, 0x000, 0x000], // ')'
    [0x000, 0x000, 0x000, 0x020, 0x020, 0x128, 0x0f0, 0x0f0, 0x128, 0x020, 0x020, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '*'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x3fc, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '+'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x030, 0x030, 0x000, 0x000], // ','
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '-'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // '.'
    [0x000, 0x000, 0x000, 0x100, 0x180, 0x080, 0x0c0, 0x040, 0x060, 0x020, 0x030, 0x010, 0x018, 0x018, 0x00c, 0x00c, 0x000, 0x000, 0x000, 0x000], // '/'
    [0x000, 0x000, 0x000, 0x0f0, 0x198, 0x18c, 0x10c, 0x30c, 0x36c, 0x36c, 0x30c, 0x10c, 0x18c, 0x198, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // '0'
    [0x000, 0x000, 0x000, 0x070, 0x068, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x3f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '1'
    [0x000, 0x000, 0x000, 0x078, 0x18c, 0x184, 0x180, 0x180, 0x180, 0x0c0, 0x060, 0x030, 0x018, 0x008, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000], // '2'
    [0x000, 0x000, 0x000, 0x0f8, 0x18c, 0x180, 0x180, 0x180, 0x0f0, 0x180, 0x100, 0x100, 0x100, 0x184, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '3'
    [0x000, 0x000, 0x000, 0x0c0, 0x0e0, 0x0e0, 0x0b0, 0x090, 0x098, 0x08c, 0x084, 0x3fc, 0x080, 0x080, 0x080, 0x000, 0x000, 0x000, 0x000, 0x000], // '4'
    [0x000, 0x000, 0x000, 0x1f8, 0x008, 0x008, 0x008, 0x0f8, 0x1c0, 0x180, 0x100, 0x100, 0x180, 0x184, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '5'
    [0x000, 0x000, 0x000, 0x0f0, 0x118, 0x008, 0x00c, 0x0fc, 0x19c, 0x10c, 0x30c, 0x30c, 0x10c, 0x198, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // '6'
    [0x000, 0x000, 0x000, 0x1fc, 0x180, 0x180, 0x080, 0x0c0, 0x0c0, 0x040, 0x060, 0x060, 0x030, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000], // '7'
    [0x000, 0x000, 0x000, 0x0f0, 0x198, 0x10c, 0x10c, 0x198, 0x0f0, 0x198, 0x10c, 0x30c, 0x30c, 0x198, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // '8'
    [0x000, 0x000, 0x000, 0x0f0, 0x188, 0x18c, 0x10c, 0x30c, 0x38c, 0x388, 0x370, 0x100, 0x180, 0x088, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000], // '9'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // ':'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x030, 0x030, 0x000, 0x000], // ';'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x200, 0x3c0, 0x070, 0x01c, 0x01c, 0x070, 0x3c0, 0x200, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '<'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3fc, 0x000, 0x000, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '='
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x004, 0x03c, 0x0f0, 0x380, 0x380, 0x0f0, 0x03c, 0x004, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '>'
    [0x000, 0x000, 0x000, 0x0f0, 0x188, 0x180, 0x180, 0x0c0, 0x040, 0x060, 0x020, 0x020, 0x000, 0x020, 0x020, 0x000, 0x000, 0x000, 0x000, 0x000], // '?'
    [0x000, 0x000, 0x000, 0x000, 0x1f0, 0x318, 0x20c, 0x3c4, 0x326, 0x236, 0x232, 0x232, 0x236, 0x326, 0x3c4, 0x00c, 0x018, 0x1e0, 0x000, 0x000], // '@'
    [0x000, 0x000, 0x000, 0x060, 0x070, 0x0f0, 0x0d0, 0x098, 0x098, 0x198, 0x188, 0x1fc, 0x30c, 0x304, 0x206, 0x000, 0x000, 0x000, 0x000, 0x000], // 'A'
    [0x000, 0x000, 0x000, 0x0fc, 0x18c, 0x10c, 0x10c, 0x18c, 0x0fc, 0x18c, 0x30c, 0x30c, 0x30c, 0x18c, 0x0fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'B'
    [0x000, 0x000, 0x000, 0x1e0, 0x118, 0x008, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x008, 0x118, 0x1e0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'C'
    [0x000, 0x000, 0x000, 0x07c, 0x0cc, 0x18c, 0x10c, 0x30c, 0x30c, 0x30c, 0x30c, 0x10c, 0x18c, 0x0cc, 0x07c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'D'
    [0x000, 0x000, 0x000, 0x3fc, 0x00c, 0x00c, 0x00c, 0x00c, 0x1fc, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'E'
    [0x000, 0x000, 0x000, 0x3f8, 0x008, 0x008, 0x008, 0x008, 0x1f8, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000], // 'F'
    [0x000, 0x000, 0x000, 0x0f0, 0x118, 0x00c, 0x00c, 0x00c, 0x00c, 0x3cc, 0x30c, 0x30c, 0x30c, 0x318, 0x1f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'G'
    [0x000, 0x000, 0x000, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x3fc, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'H'
    [0x000, 0x000, 0x000, 0x1f8, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x1f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'I'
    [0x000, 0x000, 0x000, 0x1f0, 0x180, 0x180, 0x180, 0x180, 0x180, 0x180, 0x180, 0x080, 0x080, 0x0c4, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000], // 'J'
    [0x000, 0x000, 0x000, 0x30c, 0x18c, 0x0cc, 0x06c, 0x03c, 0x03c, 0x06c, 0x0cc, 0x0cc, 0x18c, 0x30c, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'K'
    [0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x3f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'L'
    [0x000, 0x000, 0x000, 0x30c, 0x38c, 0x39c, 0x394, 0x3d4, 0x374, 0x364, 0x364, 0x304, 0x304, 0x304, 0x304, 0x000, 0x000, 0x000, 0x000, 0x000], // 'M'
    [0x000, 0x000, 0x000, 0x30c, 0x31c, 0x31c, 0x33c, 0x33c, 0x32c, 0x36c, 0x34c, 0x3cc, 0x3cc, 0x38c, 0x38c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'N'
    [0x000, 0x000, 0x000, 0x0f0, 0x198, 0x10c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x10c, 0x198, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'O'
    [0x000, 0x000, 0x000, 0x0fc, 0x18c, 0x30c, 0x30c, 0x30c, 0x18c, 0x0fc, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'P'
    [0x000, 0x000, 0x000, 0x0f0, 0x198, 0x10c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x10c, 0x198, 0x0f0, 0x080, 0x180, 0x000, 0x000, 0x000], // 'Q'
    [0x000, 0x000, 0x000, 0x0fc, 0x18c, 0x18c, 0x10c, 0x18c, 0x18c, 0x0fc, 0x0cc, 0x18c, 0x10c, 0x30c, 0x20c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'R'
    [0x000, 0x000, 0x000, 0x0f0, 0x198, 0x00c, 0x00c, 0x00c, 0x078, 0x1e0, 0x100, 0x300, 0x304, 0x18c, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'S'
    [0x000, 0x000, 0x000, 0x3fe, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // 'T'
    [0x000, 0x000, 0x000, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x30c, 0x10c, 0x198, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'U'
    [0x000, 0x000, 0x000, 0x304, 0x30c, 0x30c, 0x10c, 0x188, 0x198, 0x098, 0x090, 0x0d0, 0x0f0, 0x070, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // 'V'
    [0x000, 0x000, 0x000, 0x606, 0x206, 0x206, 0x266, 0x264, 0x374, 0x354, 0x3d4, 0x19c, 0x19c, 0x19c, 0x188, 0x000, 0x000, 0x000, 0x000, 0x000], // 'W'
    [0x000, 0x000, 0x000, 0x30c, 0x108, 0x198, 0x0d0, 0x0f0, 0x060, 0x070, 0x0f0, 0x098, 0x188, 0x30c, 0x306, 0x000, 0x000, 0x000, 0x000, 0x000], // 'X'
    [0x000, 0x000, 0x000, 0x304, 0x30c, 0x188, 0x098, 0x0d0, 0x070, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // 'Y'
    [0x000, 0x000, 0x000, 0x3fc, 0x300, 0x180, 0x180, 0x0c0, 0x060, 0x060, 0x030, 0x030, 0x018, 0x00c, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'Z'
    [0x000, 0x000, 0x000, 0x0e0, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x0e0, 0x000, 0x000, 0x000], // '['
    [0x000, 0x000, 0x000, 0x00c, 0x00c, 0x018, 0x018, 0x010, 0x030, 0x020, 0x060, 0x040, 0x0c0, 0x080, 0x180, 0x100, 0x000, 0x000, 0x000, 0x000], // '\\'
    [0x000, 0x000, 0x000, 0x070, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x070, 0x000, 0x000, 0x000], // ']'
    [0x000, 0x000, 0x000, 0x060, 0x0f0, 0x198, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '^'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x7fe, 0x000], // '_'
    [0x000, 0x000, 0x010, 0x030, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '`'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x188, 0x100, 0x1f0, 0x10c, 0x10c, 0x18c, 0x18c, 0x178, 0x000, 0x000, 0x000, 0x000, 0x000], // 'a'
    [0x000, 0x000, 0x000, 0x00c, 0x00c, 0x00c, 0x0ec, 0x19c, 0x10c, 0x30c, 0x30c, 0x30c, 0x10c, 0x19c, 0x0ec, 0x000, 0x000, 0x000, 0x000, 0x000], // 'b'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1e0, 0x018, 0x018, 0x008, 0x00c, 0x008, 0x018, 0x018, 0x1e0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'c'
    [0x000, 0x000, 0x000, 0x100, 0x100, 0x100, 0x1f0, 0x198, 0x18c, 0x10c, 0x10c, 0x10c, 0x18c, 0x188, 0x1f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'd'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x198, 0x10c, 0x30c, 0x3fc, 0x00c, 0x00c, 0x118, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'e'
    [0x000, 0x000, 0x000, 0x1c0, 0x060, 0x020, 0x1fc, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x000, 0x000, 0x000, 0x000, 0x000], // 'f'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1f0, 0x198, 0x18c, 0x10c, 0x10c, 0x10c, 0x18c, 0x198, 0x1f0, 0x100, 0x188, 0x0f0, 0x000, 0x000], // 'g'
    [0x000, 0x000, 0x000, 0x00c, 0x00c, 0x00c, 0x0ec, 0x19c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'h'
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x000, 0x078, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'i'
    [0x000, 0x000, 0x000, 0x040, 0x040, 0x000, 0x078, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x060, 0x03c, 0x000, 0x000], // 'j'
    [0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x108, 0x088, 0x048, 0x078, 0x078, 0x0c8, 0x188, 0x108, 0x308, 0x000, 0x000, 0x000, 0x000, 0x000], // 'k'
    [0x000, 0x000, 0x000, 0x03c, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x020, 0x060, 0x1c0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'l'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1bc, 0x36c, 0x364, 0x364, 0x364, 0x364, 0x364, 0x364, 0x364, 0x000, 0x000, 0x000, 0x000, 0x000], // 'm'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0ec, 0x19c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'n'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x198, 0x10c, 0x30c, 0x30c, 0x30c, 0x10c, 0x198, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'o'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0ec, 0x19c, 0x10c, 0x30c, 0x30c, 0x30c, 0x10c, 0x19c, 0x0fc, 0x00c, 0x00c, 0x00c, 0x000, 0x000], // 'p'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1f0, 0x198, 0x18c, 0x10c, 0x10c, 0x10c, 0x18c, 0x198, 0x1f0, 0x100, 0x100, 0x100, 0x000, 0x000], // 'q'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3d0, 0x270, 0x030, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000], // 'r'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x118, 0x008, 0x018, 0x0f0, 0x180, 0x180, 0x188, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 's'
    [0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x1fc, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x020, 0x1e0, 0x000, 0x000, 0x000, 0x000, 0x000], // 't'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x10c, 0x188, 0x198, 0x170, 0x000, 0x000, 0x000, 0x000, 0x000], // 'u'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x30c, 0x10c, 0x188, 0x198, 0x098, 0x0d0, 0x0f0, 0x070, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // 'v'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x606, 0x206, 0x204, 0x364, 0x364, 0x17c, 0x1dc, 0x198, 0x198, 0x000, 0x000, 0x000, 0x000, 0x000], // 'w'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x10c, 0x198, 0x0d0, 0x070, 0x060, 0x0f0, 0x098, 0x188, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'x'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x30c, 0x10c, 0x108, 0x198, 0x098, 0x0d0, 0x0f0, 0x060, 0x060, 0x020, 0x030, 0x01c, 0x000, 0x000], // 'y'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1f8, 0x180, 0x0c0, 0x0c0, 0x060, 0x030, 0x018, 0x018, 0x1f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'z'
    [0x000, 0x000, 0x000, 0x1c0, 0x060, 0x060, 0x060, 0x060, 0x060, 0x020, 0x038, 0x020, 0x060, 0x060, 0x060, 0x060, 0x060, 0x1c0, 0x000, 0x000], // '{'
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000], // '|'
    [0x000, 0x000, 0x000, 0x038, 0x020, 0x060, 0x060, 0x060, 0x060, 0x060, 0x1c0, 0x060, 0x060, 0x060, 0x060, 0x060, 0x020, 0x038, 0x000, 0x000], // '}'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x23c, 0x1c0, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '~'
];

pub const GLYPHS_BOLD: [[u16; CELL_H]; 95] = [
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // ' '
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // '!'
    [0x000, 0x000, 0x000, 0x198, 0x198, 0x198, 0x198, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '"'
    [0x000, 0x000, 0x000, 0x320, 0x330, 0x1b0, 0x7fc, 0x7fc, 0x198, 0x0d8, 0x3fe, 0x3fe, 0x0cc, 0x04c, 0x06c, 0x000, 0x000, 0x000, 0x000, 0x000], // '#'
    [0x000, 0x000, 0x000, 0x020, 0x020, 0x1f8, 0x1f8, 0x03c, 0x07c, 0x0f8, 0x1e0, 0x3a0, 0x1ec, 0x1fc, 0x0f8, 0x020, 0x020, 0x000, 0x000, 0x000], // '$'
    [0x000, 0x000, 0x000, 0x01c, 0x036, 0x026, 0x036, 0x31c, 0x0c0, 0x030, 0x384, 0x240, 0x640, 0x240, 0x380, 0x000, 0x000, 0x000, 0x000, 0x000], // '%'
    [0x000, 0x000, 0x000, 0x0f0, 0x0f8, 0x098, 0x018, 0x038, 0x038, 0x66c, 0x2ee, 0x3ce, 0x3ce, 0x3fc, 0x3f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '&'
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // "'"
    [0x000, 0x000, 0x000, 0x0c0, 0x0e0, 0x060, 0x060, 0x070, 0x030, 0x030, 0x030, 0x030, 0x070, 0x060, 0x060, 0x0e0, 0x0c0, 0x000, 0x000, 0x000], // '('
    [0x000, 0x000, 0x000, 0x030, 0x030, 0x060, 0x060, 0x060, 0x0e0, 0x0e0, 0x0e0, 0x0e0, 0x060, 0x060, 0x060, 0x030, 0x030, 0x000, 0x000, 0x000], // ')'
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x16c, 0x0f8, 0x0f8, 0x16c, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '*'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x3fe, 0x3fe, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '+'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x060, 0x060, 0x070, 0x030, 0x030, 0x000, 0x000, 0x000], // ','
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f8, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '-'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x070, 0x070, 0x070, 0x000, 0x000, 0x000, 0x000, 0x000], // '.'
    [0x000, 0x000, 0x000, 0x300, 0x180, 0x180, 0x0c0, 0x0c0, 0x060, 0x060, 0x030, 0x030, 0x018, 0x018, 0x008, 0x00c, 0x000, 0x000, 0x000, 0x000], // '/'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x19c, 0x39c, 0x38c, 0x3ec, 0x3ec, 0x38c, 0x39c, 0x19c, 0x1f8, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // '0'
    [0x000, 0x000, 0x000, 0x070, 0x078, 0x068, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x3fc, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // '1'
    [0x000, 0x000, 0x000, 0x0f8, 0x1fc, 0x1c4, 0x180, 0x180, 0x1c0, 0x0e0, 0x070, 0x038, 0x01c, 0x1fc, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000], // '2'
    [0x000, 0x000, 0x000, 0x0f8, 0x1fc, 0x18c, 0x180, 0x180, 0x0f0, 0x1f0, 0x180, 0x380, 0x384, 0x1fc, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '3'
    [0x000, 0x000, 0x000, 0x1c0, 0x1e0, 0x1e0, 0x1f0, 0x1d8, 0x1d8, 0x1cc, 0x3fc, 0x3fc, 0x1c0, 0x1c0, 0x1c0, 0x000, 0x000, 0x000, 0x000, 0x000], // '4'
    [0x000, 0x000, 0x000, 0x1fc, 0x1fc, 0x00c, 0x00c, 0x0fc, 0x1fc, 0x1c0, 0x380, 0x380, 0x1c4, 0x1fc, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // '5'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x118, 0x01c, 0x0fc, 0x1fc, 0x39c, 0x39c, 0x39c, 0x39c, 0x1f8, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // '6'
    [0x000, 0x000, 0x000, 0x3fc, 0x1fc, 0x180, 0x1c0, 0x0c0, 0x0c0, 0x0e0, 0x060, 0x070, 0x070, 0x030, 0x038, 0x000, 0x000, 0x000, 0x000, 0x000], // '7'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x19c, 0x18c, 0x19c, 0x0f8, 0x1f8, 0x19c, 0x38c, 0x39c, 0x1fc, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // '8'
    [0x000, 0x000, 0x000, 0x0f8, 0x1f8, 0x19c, 0x18c, 0x38c, 0x39c, 0x3fc, 0x3f8, 0x180, 0x1c0, 0x0f8, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000], // '9'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x070, 0x070, 0x070, 0x000, 0x000, 0x070, 0x070, 0x070, 0x000, 0x000, 0x000, 0x000, 0x000], // ':'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x070, 0x070, 0x070, 0x000, 0x000, 0x070, 0x070, 0x070, 0x030, 0x030, 0x000, 0x000, 0x000], // ';'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x300, 0x3c0, 0x0f8, 0x01c, 0x01c, 0x0f8, 0x3c0, 0x300, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '<'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3fc, 0x3fc, 0x000, 0x000, 0x3fc, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '='
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x004, 0x03c, 0x0f8, 0x3c0, 0x3c0, 0x1f8, 0x03c, 0x004, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '>'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x188, 0x180, 0x1c0, 0x0e0, 0x060, 0x070, 0x070, 0x000, 0x070, 0x070, 0x000, 0x000, 0x000, 0x000, 0x000], // '?'
    [0x000, 0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x31c, 0x30e, 0x3e6, 0x3f6, 0x336, 0x3f6, 0x3e6, 0x00c, 0x31c, 0x3f8, 0x1f0, 0x000, 0x000, 0x000], // '@'
    [0x000, 0x000, 0x000, 0x070, 0x0f0, 0x0f0, 0x0f8, 0x0d8, 0x198, 0x198, 0x1fc, 0x3fc, 0x38c, 0x30c, 0x30e, 0x000, 0x000, 0x000, 0x000, 0x000], // 'A'
    [0x000, 0x000, 0x000, 0x0fc, 0x1fc, 0x38c, 0x38c, 0x18c, 0x1fc, 0x1fc, 0x38c, 0x30c, 0x38c, 0x3fc, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'B'
    [0x000, 0x000, 0x000, 0x1e0, 0x3f8, 0x038, 0x01c, 0x01c, 0x01c, 0x01c, 0x01c, 0x01c, 0x038, 0x3f8, 0x1e0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'C'
    [0x000, 0x000, 0x000, 0x07c, 0x1fc, 0x1cc, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x1cc, 0x1fc, 0x07c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'D'
    [0x000, 0x000, 0x000, 0x3fc, 0x3fc, 0x01c, 0x01c, 0x01c, 0x1fc, 0x1fc, 0x01c, 0x01c, 0x01c, 0x3fc, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'E'
    [0x000, 0x000, 0x000, 0x3fc, 0x3fc, 0x01c, 0x01c, 0x01c, 0x1fc, 0x1fc, 0x01c, 0x01c, 0x01c, 0x01c, 0x01c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'F'
    [0x000, 0x000, 0x000, 0x1f0, 0x1f8, 0x038, 0x01c, 0x01c, 0x00c, 0x3cc, 0x3dc, 0x31c, 0x338, 0x3f8, 0x1f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'G'
    [0x000, 0x000, 0x000, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x3fc, 0x3fc, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'H'
    [0x000, 0x000, 0x000, 0x1fc, 0x1fc, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x1fc, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'I'
    [0x000, 0x000, 0x000, 0x1f0, 0x1f0, 0x180, 0x180, 0x180, 0x180, 0x180, 0x180, 0x1c0, 0x1c4, 0x1fc, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'J'
    [0x000, 0x000, 0x000, 0x38c, 0x18c, 0x1cc, 0x0ec, 0x07c, 0x07c, 0x0fc, 0x0dc, 0x1cc, 0x18c, 0x38c, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'K'
    [0x000, 0x000, 0x000, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x3f8, 0x3f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'L'
    [0x000, 0x000, 0x000, 0x39c, 0x39c, 0x39c, 0x3dc, 0x3fc, 0x37c, 0x37c, 0x36c, 0x30c, 0x30c, 0x30c, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'M'
    [0x000, 0x000, 0x000, 0x31c, 0x31c, 0x31c, 0x33c, 0x33c, 0x36c, 0x36c, 0x3ec, 0x3cc, 0x3cc, 0x38c, 0x38c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'N'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x19c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x19c, 0x1f8, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'O'
    [0x000, 0x000, 0x000, 0x0fc, 0x3fc, 0x39c, 0x39c, 0x39c, 0x3fc, 0x0fc, 0x01c, 0x01c, 0x01c, 0x01c, 0x01c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'P'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x19c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x19c, 0x1f8, 0x0f0, 0x1c0, 0x180, 0x000, 0x000, 0x000], // 'Q'
    [0x000, 0x000, 0x000, 0x0fc, 0x1fc, 0x38c, 0x38c, 0x18c, 0x1fc, 0x0fc, 0x1cc, 0x1cc, 0x38c, 0x38c, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'R'
    [0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x11c, 0x00c, 0x03c, 0x0f8, 0x1f0, 0x3c0, 0x380, 0x384, 0x1fc, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'S'
    [0x000, 0x000, 0x000, 0x3fc, 0x3fc, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // 'T'
    [0x000, 0x000, 0x000, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x38c, 0x39c, 0x1fc, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'U'
    [0x000, 0x000, 0x000, 0x30c, 0x30c, 0x38c, 0x19c, 0x19c, 0x198, 0x1d8, 0x1d8, 0x0f8, 0x0f0, 0x0f0, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'V'
    [0x000, 0x000, 0x000, 0x606, 0x706, 0x306, 0x366, 0x36e, 0x37c, 0x3fc, 0x3fc, 0x3dc, 0x39c, 0x39c, 0x19c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'W'
    [0x000, 0x000, 0x000, 0x30c, 0x39c, 0x1d8, 0x0f8, 0x0f0, 0x070, 0x070, 0x0f0, 0x1f8, 0x198, 0x38c, 0x30e, 0x000, 0x000, 0x000, 0x000, 0x000], // 'X'
    [0x000, 0x000, 0x000, 0x30e, 0x38c, 0x19c, 0x1d8, 0x0f8, 0x0f0, 0x070, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000], // 'Y'
    [0x000, 0x000, 0x000, 0x3fc, 0x3fc, 0x380, 0x1c0, 0x0e0, 0x0e0, 0x070, 0x038, 0x038, 0x01c, 0x3fc, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'Z'
    [0x000, 0x000, 0x000, 0x0f0, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x0f0, 0x000, 0x000, 0x000], // '['
    [0x000, 0x000, 0x000, 0x00c, 0x008, 0x018, 0x018, 0x030, 0x030, 0x060, 0x060, 0x0c0, 0x0c0, 0x180, 0x180, 0x300, 0x000, 0x000, 0x000, 0x000], // '\\'
    [0x000, 0x000, 0x000, 0x078, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x078, 0x000, 0x000, 0x000], // ']'
    [0x000, 0x000, 0x000, 0x070, 0x0f0, 0x1d8, 0x30c, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '^'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x7fe, 0x000], // '_'
    [0x000, 0x000, 0x018, 0x030, 0x060, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '`'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f8, 0x1f8, 0x388, 0x3f8, 0x3fc, 0x39c, 0x38c, 0x3fc, 0x3f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'a'
    [0x000, 0x000, 0x000, 0x01c, 0x01c, 0x01c, 0x0fc, 0x1fc, 0x39c, 0x39c, 0x31c, 0x39c, 0x39c, 0x1fc, 0x0fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'b'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1f0, 0x1f8, 0x138, 0x01c, 0x01c, 0x01c, 0x138, 0x1f8, 0x1f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'c'
    [0x000, 0x000, 0x000, 0x380, 0x380, 0x380, 0x3b8, 0x3fc, 0x3dc, 0x38c, 0x38c, 0x38c, 0x3dc, 0x3fc, 0x3b8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'd'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x39c, 0x3fc, 0x3fc, 0x00c, 0x21c, 0x3f8, 0x1f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'e'
    [0x000, 0x000, 0x000, 0x3e0, 0x3e0, 0x070, 0x3fc, 0x3fc, 0x070, 0x070, 0x070, 0x070, 0x070, 0x070, 0x070, 0x000, 0x000, 0x000, 0x000, 0x000], // 'f'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3f8, 0x3fc, 0x39c, 0x38c, 0x38c, 0x38c, 0x39c, 0x3fc, 0x3f8, 0x388, 0x1f8, 0x0f8, 0x000, 0x000], // 'g'
    [0x000, 0x000, 0x000, 0x01c, 0x01c, 0x01c, 0x0fc, 0x1fc, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'h'
    [0x000, 0x000, 0x060, 0x060, 0x060, 0x000, 0x078, 0x078, 0x060, 0x060, 0x060, 0x060, 0x060, 0x3fc, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'i'
    [0x000, 0x000, 0x0e0, 0x0e0, 0x0e0, 0x000, 0x0f8, 0x0f8, 0x0e0, 0x0e0, 0x0e0, 0x0e0, 0x0e0, 0x0e0, 0x0e0, 0x0e0, 0x07c, 0x07c, 0x000, 0x000], // 'j'
    [0x000, 0x000, 0x000, 0x01c, 0x01c, 0x01c, 0x39c, 0x1dc, 0x0fc, 0x07c, 0x0fc, 0x0dc, 0x1dc, 0x19c, 0x39c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'k'
    [0x000, 0x000, 0x000, 0x03c, 0x03c, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x070, 0x3f0, 0x3e0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'l'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1bc, 0x3fc, 0x36c, 0x36c, 0x36c, 0x36c, 0x36c, 0x36c, 0x36c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'm'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0fc, 0x1fc, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'n'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x39c, 0x38c, 0x38c, 0x38c, 0x39c, 0x1f8, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000], // 'o'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0fc, 0x1fc, 0x39c, 0x39c, 0x31c, 0x39c, 0x39c, 0x1fc, 0x0fc, 0x01c, 0x01c, 0x01c, 0x000, 0x000], // 'p'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3b8, 0x3fc, 0x3dc, 0x38c, 0x38c, 0x38c, 0x3dc, 0x3fc, 0x3b8, 0x380, 0x380, 0x380, 0x000, 0x000], // 'q'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3f8, 0x3f8, 0x038, 0x038, 0x038, 0x038, 0x038, 0x038, 0x038, 0x000, 0x000, 0x000, 0x000, 0x000], // 'r'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x1f8, 0x11c, 0x018, 0x0f8, 0x180, 0x18c, 0x1fc, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000], // 's'
    [0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x1fc, 0x1fc, 0x030, 0x030, 0x030, 0x030, 0x070, 0x1f0, 0x1e0, 0x000, 0x000, 0x000, 0x000, 0x000], // 't'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x19c, 0x1dc, 0x1f8, 0x1b8, 0x000, 0x000, 0x000, 0x000, 0x000], // 'u'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x38c, 0x38c, 0x19c, 0x198, 0x1d8, 0x0d8, 0x0f0, 0x0f0, 0x070, 0x000, 0x000, 0x000, 0x000, 0x000], // 'v'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x606, 0x306, 0x366, 0x36c, 0x37c, 0x3fc, 0x3dc, 0x1dc, 0x19c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'w'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x39c, 0x1d8, 0x0f8, 0x0f0, 0x070, 0x0f0, 0x1f8, 0x19c, 0x38c, 0x000, 0x000, 0x000, 0x000, 0x000], // 'x'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x30c, 0x38c, 0x19c, 0x198, 0x1d8, 0x0f0, 0x0f0, 0x070, 0x060, 0x070, 0x03c, 0x01c, 0x000, 0x000], // 'y'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3fc, 0x1fc, 0x1c0, 0x0e0, 0x060, 0x030, 0x018, 0x3fc, 0x3fc, 0x000, 0x000, 0x000, 0x000, 0x000], // 'z'
    [0x000, 0x000, 0x000, 0x1c0, 0x060, 0x060, 0x060, 0x060, 0x060, 0x070, 0x03c, 0x070, 0x060, 0x060, 0x060, 0x060, 0x060, 0x1e0, 0x000, 0x000], // '{'
    [0x000, 0x000, 0x000, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x060, 0x000], // '|'
    [0x000, 0x000, 0x000, 0x03c, 0x070, 0x060, 0x060, 0x060, 0x060, 0x060, 0x1c0, 0x060, 0x060, 0x060, 0x060, 0x060, 0x070, 0x03c, 0x000, 0x000], // '}'
    [0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x23c, 0x3fc, 0x1c0, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000], // '~'
];

pub const GLYPH_REPLACEMENT: [u16; CELL_H] = [0x000, 0x000, 0x7fe, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x402, 0x7fe, 0x000, 0x000];
