// Generated by tools/gen_unicode_tables.py from Unicode 13.0.0 data.
// Do not edit by hand.

#include "unicode_tables.hpp"

namespace idu::unicode::detail {

const CodepointRecord kCodepointRecords[] = {
    {0x0000, 0, "<control>"},
    {0x0001, 0, "<control>"},
    {0x0002, 0, "<control>"},
    {0x0003, 0, "<control>"},
    {0x0004, 0, "<control>"},
    {0x0005, 0, "<control>"},
    {0x0006, 0, "<control>"},
    {0x0007, 0, "<control>"},
    {0x0008, 0, "<control>"},
    {0x0009, 0, "<control>"},
    {0x000A, 0, "<control>"},
    {0x000B, 0, "<control>"},
    {0x000C, 0, "<control>"},
    {0x000D, 0, "<control>"},
    {0x000E, 0, "<control>"},
    {0x000F, 0, "<control>"},
    {0x0010, 0, "<control>"},
    {0x0011, 0, "<control>"},
    {0x0012, 0, "<control>"},
    {0x0013, 0, "<control>"},
    {0x0014, 0, "<control>"},
    {0x0015, 0, "<control>"},
    {0x0016, 0, "<control>"},
    {0x0017, 0, "<control>"},
    {0x0018, 0, "<control>"},
    {0x0019, 0, "<control>"},
    {0x001A, 0, "<control>"},
    {0x001B, 0, "<control>"},
    {0x001C, 0, "<control>"},
    {0x001D, 0, "<control>"},
    {0x001E, 0, "<control>"},
    {0x001F, 0, "<control>"},
    {0x0020, 0, "SPACE"},
    {0x0021, 0, "EXCLAMATION MARK"},
    {0x0022, 0, "QUOTATION MARK"},
    {0x0023, 0, "NUMBER SIGN"},
    {0x0024, 0, "DOLLAR SIGN"},
    {0x0025, 0, "PERCENT SIGN"},
    {0x0026, 0, "AMPERSAND"},
    {0x0027, 0, "APOSTROPHE"},
    {0x0028, 0, "LEFT PARENTHESIS"},
    {0x0029, 0, "RIGHT PARENTHESIS"},
    {0x002A, 0, "ASTERISK"},
    {0x002B, 0, "PLUS SIGN"},
    {0x002C, 0, "COMMA"},
    {0x002D, 0, "HYPHEN-MINUS"},
    {0x002E, 0, "FULL STOP"},
    {0x002F, 0, "SOLIDUS"},
    {0x0030, 0, "DIGIT ZERO"},
    {0x0031, 0, "DIGIT ONE"},
    {0x0032, 0, "DIGIT TWO"},
    {0x0033, 0, "DIGIT THREE"},
    {0x0034, 0, "DIGIT FOUR"},
    {0x0035, 0, "DIGIT FIVE"},
    {0x0036, 0, "DIGIT SIX"},
    {0x0037, 0, "DIGIT SEVEN"},
    {0x0038, 0, "DIGIT EIGHT"},
    {0x0039, 0, "DIGIT NINE"},
    {0x003A, 0, "COLON"},
    {0x003B, 0, "SEMICOLON"},
    {0x003C, 0, "LESS-THAN SIGN"},
    {0x003D, 0, "EQUALS SIGN"},
    {0x003E, 0, "GREATER-THAN SIGN"},
    {0x003F, 0, "QUESTION MARK"},
    {0x0040, 0, "COMMERCIAL AT"},
    {0x0041, 0, "LATIN CAPITAL LETTER A"},
    {0x0042, 0, "LATIN CAPITAL LETTER B"},
    {0x0043, 0, "LATIN CAPITAL LETTER C"},
    {0x0044, 0, "LATIN CAPITAL LETTER D"},
    {0x0045, 0, "LATIN CAPITAL LETTER E"},
    {0x0046, 0, "LATIN CAPITAL LETTER F"},
    {0x0047, 0, "LATIN CAPITAL LETTER G"},
    {0x0048, 0, "LATIN CAPITAL LETTER H"},
    {0x0049, 0, "LATIN CAPITAL LETTER I"},
    {0x004A, 0, "LATIN CAPITAL LETTER J"},
    {0x004B, 0, "LATIN CAPITAL LETTER K"},
    {0x004C, 0, "LATIN CAPITAL LETTER L"},
    {0x004D, 0, "LATIN CAPITAL LETTER M"},
    {0x004E, 0, "LATIN CAPITAL LETTER N"},
    {0x004F, 0, "LATIN CAPITAL LETTER O"},
    {0x0050, 0, "LATIN CAPITAL LETTER P"},
    {0x0051, 0, "LATIN CAPITAL LETTER Q"},
    {0x0052, 0, "LATIN CAPITAL LETTER R"},
    {0x0053, 0, "LATIN CAPITAL LETTER S"},
    {0x0054, 0, "LATIN CAPITAL LETTER T"},
    {0x0055, 0, "LATIN CAPITAL LETTER U"},
    {0x0056, 0, "LATIN CAPITAL LETTER V"},
    {0x0057, 0, "LATIN CAPITAL LETTER W"},
    {0x0058, 0, "LATIN CAPITAL LETTER X"},
    {0x0059, 0, "LATIN CAPITAL LETTER Y"},
    {0x005A, 0, "LATIN CAPITAL LETTER Z"},
    {0x005B, 0, "LEFT SQUARE BRACKET"},
    {0x005C, 0, "REVERSE SOLIDUS"},
    {0x005D, 0, "RIGHT SQUARE BRACKET"},
    {0x005E, 0, "CIRCUMFLEX ACCENT"},
    {0x005F, 0, "LOW LINE"},
    {0x0060, 0, "GRAVE ACCENT"},
    {0x0061, 0, "LATIN SMALL LETTER A"},
    {0x0062, 0, "LATIN SMALL LETTER B"},
    {0x0063, 0, "LATIN SMALL LETTER C"},
    {0x0064, 0, "LATIN SMALL LETTER D"},
    {0x0065, 0, "LATIN SMALL LETTER E"},
    {0x0066, 0, "LATIN SMALL LETTER F"},
    {0x0067, 0, "LATIN SMALL LETTER G"},
    {0x0068, 0, "LATIN SMALL LETTER H"},
    {0x0069, 0, "LATIN SMALL LETTER I"},
    {0x006A, 0, "LATIN SMALL LETTER J"},
    {0x006B, 0, "LATIN SMALL LETTER K"},
    {0x006C, 0, "LATIN SMALL LETTER L"},
    {0x006D, 0, "LATIN SMALL LETTER M"},
    {0x006E, 0, "LATIN SMALL LETTER N"},
    {0x006F, 0, "LATIN SMALL LETTER O"},
    {0x0070, 0, "LATIN SMALL LETTER P"},
    {0x0071, 0, "LATIN SMALL LETTER Q"},
    {0x0072, 0, "LATIN SMALL LETTER R"},
    {0x0073, 0, "LATIN SMALL LETTER S"},
    {0x0074, 0, "LATIN SMALL LETTER T"},
    {0x0075, 0, "LATIN SMALL LETTER U"},
    {0x0076, 0, "LATIN SMALL LETTER V"},
    {0x0077, 0, "LATIN SMALL LETTER W"},
    {0x0078, 0, "LATIN SMALL LETTER X"},
    {0x0079, 0, "LATIN SMALL LETTER Y"},
    {0x007A, 0, "LATIN SMALL LETTER Z"},
    {0x007B, 0, "LEFT CURLY BRACKET"},
    {0x007C, 0, "VERTICAL LINE"},
    {0x007D, 0, "RIGHT CURLY BRACKET"},
    {0x007E, 0, "TILDE"},
    {0x007F, 0, "<control>"},
    {0x00A0, 0, "NO-BREAK SPACE"},
    {0x00A1, 0, "INVERTED EXCLAMATION MARK"},
    {0x00A2, 0, "CENT SIGN"},
    {0x00A3, 0, "POUND SIGN"},
    {0x00A4, 0, "CURRENCY SIGN"},
    {0x00A5, 0, "YEN SIGN"},
    {0x00A6, 0, "BROKEN BAR"},
    {0x00A7, 0, "SECTION SIGN"},
    {0x00A8, 0, "DIAERESIS"},
    {0x00A9, 0, "COPYRIGHT SIGN"},
    {0x00AA, 0, "FEMININE ORDINAL INDICATOR"},
    {0x00AB, 0, "LEFT-POINTING DOUBLE ANGLE QUOTATION MARK"},
    {0x00AC, 0, "NOT SIGN"},
    {0x00AD, 0, "SOFT HYPHEN"},
    {0x00AE, 0, "REGISTERED SIGN"},
    {0x00AF, 0, "MACRON"},
    {0x00B0, 0, "DEGREE SIGN"},
    {0x00B1, 0, "PLUS-MINUS SIGN"},
    {0x00B2, 0, "SUPERSCRIPT TWO"},
    {0x00B3, 0, "SUPERSCRIPT THREE"},
    {0x00B4, 0, "ACUTE ACCENT"},
    {0x00B5, 0, "MICRO SIGN"},
    {0x00B6, 0, "PILCROW SIGN"},
    {0x00B7, 0, "MIDDLE DOT"},
    {0x00B8, 0, "CEDILLA"},
    {0x00B9, 0, "SUPERSCRIPT ONE"},
    {0x00BA, 0, "MASCULINE ORDINAL INDICATOR"},
    {0x00BB, 0, "RIGHT-POINTING DOUBLE ANGLE QUOTATION MARK"},
    {0x00BC, 0, "VULGAR FRACTION ONE QUARTER"},
    {0x00BD, 0, "VULGAR FRACTION ONE HALF"},
    {0x00BE, 0, "VULGAR FRACTION THREE QUARTERS"},
    {0x00BF, 0, "INVERTED QUESTION MARK"},
    {0x00C0, 0, "LATIN CAPITAL LETTER A WITH GRAVE"},
    {0x00C1, 0, "LATIN CAPITAL LETTER A WITH ACUTE"},
    {0x00C2, 0, "LATIN CAPITAL LETTER A WITH CIRCUMFLEX"},
    {0x00C3, 0, "LATIN CAPITAL LETTER A WITH TILDE"},
    {0x00C4, 0, "LATIN CAPITAL LETTER A WITH DIAERESIS"},
    {0x00C5, 0, "LATIN CAPITAL LETTER A WITH RING ABOVE"},
    {0x00C6, 0, "LATIN CAPITAL LETTER AE"},
    {0x00C7, 0, "LATIN CAPITAL LETTER C WITH CEDILLA"},
    {0x00C8, 0, "LATIN CAPITAL LETTER E WITH GRAVE"},
    {0x00C9, 0, "LATIN CAPITAL LETTER E WITH ACUTE"},
    {0x00CA, 0, "LATIN CAPITAL LETTER E WITH CIRCUMFLEX"},
    {0x00CB, 0, "LATIN CAPITAL LETTER E WITH DIAERESIS"},
    {0x00CC, 0, "LATIN CAPITAL LETTER I WITH GRAVE"},
    {0x00CD, 0, "LATIN CAPITAL LETTER I WITH ACUTE"},
    {0x00CE, 0, "LATIN CAPITAL LETTER I WITH CIRCUMFLEX"},
    {0x00CF, 0, "LATIN CAPITAL LETTER I WITH DIAERESIS"},
    {0x00D0, 0, "LATIN CAPITAL LETTER ETH"},
    {0x00D1, 0, "LATIN CAPITAL LETTER N WITH TILDE"},
    {0x00D2, 0, "LATIN CAPITAL LETTER O WITH GRAVE"},
    {0x00D3, 0, "LATIN CAPITAL LETTER O WITH ACUTE"},
    {0x00D4, 0, "LATIN CAPITAL LETTER O WITH CIRCUMFLEX"},
    {0x00D5, 0, "LATIN CAPITAL LETTER O WITH TILDE"},
    {0x00D6, 0, "LATIN CAPITAL LETTER O WITH DIAERESIS"},
    {0x00D7, 0, "MULTIPLICATION SIGN"},
    {0x00D8, 0, "LATIN CAPITAL LETTER O WITH STROKE"},
    {0x00D9, 0, "LATIN CAPITAL LETTER U WITH GRAVE"},
    {0x00DA, 0, "LATIN CAPITAL LETTER U WITH ACUTE"},
    {0x00DB, 0, "LATIN CAPITAL LETTER U WITH CIRCUMFLEX"},
    {0x00DC, 0, "LATIN CAPITAL LETTER U WITH DIAERESIS"},
    {0x00DD, 0, "LATIN CAPITAL LETTER Y WITH ACUTE"},
    {0x00DE, 0, "LATIN CAPITAL LETTER THORN"},
    {0x00DF, 0, "LATIN SMALL LETTER SHARP S"},
    {0x00E0, 0, "LATIN SMALL LETTER A WITH GRAVE"},
    {0x00E1, 0, "LATIN SMALL LETTER A WITH ACUTE"},
    {0x00E2, 0, "LATIN SMALL LETTER A WITH CIRCUMFLEX"},
    {0x00E3, 0, "LATIN SMALL LETTER A WITH TILDE"},
    {0x00E4, 0, "LATIN SMALL LETTER A WITH DIAERESIS"},
    {0x00E5, 0, "LATIN SMALL LETTER A WITH RING ABOVE"},
    {0x00E6, 0, "LATIN SMALL LETTER AE"},
    {0x00E7, 0, "LATIN SMALL LETTER C WITH CEDILLA"},
    {0x00E8, 0, "LATIN SMALL LETTER E WITH GRAVE"},
    {0x00E9, 0, "LATIN SMALL LETTER E WITH ACUTE"},
    {0x00EA, 0, "LATIN SMALL LETTER E WITH CIRCUMFLEX"},
    {0x00EB, 0, "LATIN SMALL LETTER E WITH DIAERESIS"},
    {0x00EC, 0, "LATIN SMALL LETTER I WITH GRAVE"},
    {0x00ED, 0, "LATIN SMALL LETTER I WITH ACUTE"},
    {0x00EE, 0, "LATIN SMALL LETTER I WITH CIRCUMFLEX"},
    {0x00EF, 0, "LATIN SMALL LETTER I WITH DIAERESIS"},
    {0x00F0, 0, "LATIN SMALL LETTER ETH"},
    {0x00F1, 0, "LATIN SMALL LETTER N WITH TILDE"},
    {0x00F2, 0, "LATIN SMALL LETTER O WITH GRAVE"},
    {0x00F3, 0, "LATIN SMALL LETTER O WITH ACUTE"},
    {0x00F4, 0, "LATIN SMALL LETTER O WITH CIRCUMFLEX"},
    {0x00F5, 0, "LATIN SMALL LETTER O WITH TILDE"},
    {0x00F6, 0, "LATIN SMALL LETTER O WITH DIAERESIS"},
    {0x00F7, 0, "DIVISION SIGN"},
    {0x00F8, 0, "LATIN SMALL LETTER O WITH STROKE"},
    {0x00F9, 0, "LATIN SMALL LETTER U WITH GRAVE"},
    {0x00FA, 0, "LATIN SMALL LETTER U WITH ACUTE"},
    {0x00FB, 0, "LATIN SMALL LETTER U WITH CIRCUMFLEX"},
    {0x00FC, 0, "LATIN SMALL LETTER U WITH DIAERESIS"},
    {0x00FD, 0, "LATIN SMALL LETTER Y WITH ACUTE"},
    {0x00FE, 0, "LATIN SMALL LETTER THORN"},
    {0x00FF, 0, "LATIN SMALL LETTER Y WITH DIAERESIS"},
    {0x0100, 0, "LATIN CAPITAL LETTER A WITH MACRON"},
    {0x0101, 0, "LATIN SMALL LETTER A WITH MACRON"},
    {0x0102, 0, "LATIN CAPITAL LETTER A WITH BREVE"},
    {0x0103, 0, "LATIN SMALL LETTER A WITH BREVE"},
    {0x0104, 0, "LATIN CAPITAL LETTER A WITH OGONEK"},
    {0x0105, 0, "LATIN SMALL LETTER A WITH OGONEK"},
    {0x0106, 0, "LATIN CAPITAL LETTER C WITH ACUTE"},
    {0x0107, 0, "LATIN SMALL LETTER C WITH ACUTE"},
    {0x0108, 0, "LATIN CAPITAL LETTER C WITH CIRCUMFLEX"},
    {0x0109, 0, "LATIN SMALL LETTER C WITH CIRCUMFLEX"},
    {0x010A, 0, "LATIN CAPITAL LETTER C WITH DOT ABOVE"},
    {0x010B, 0, "LATIN SMALL LETTER C WITH DOT ABOVE"},
    {0x010C, 0, "LATIN CAPITAL LETTER C WITH CARON"},
    {0x010D, 0, "LATIN SMALL LETTER C WITH CARON"},
    {0x010E, 0, "LATIN CAPITAL LETTER D WITH CARON"},
    {0x010F, 0, "LATIN SMALL LETTER D WITH CARON"},
    {0x0110, 0, "LATIN CAPITAL LETTER D WITH STROKE"},
    {0x0111, 0, "LATIN SMALL LETTER D WITH STROKE"},
    {0x0112, 0, "LATIN CAPITAL LETTER E WITH MACRON"},
    {0x0113, 0, "LATIN SMALL LETTER E WITH MACRON"},
    {0x0114, 0, "LATIN CAPITAL LETTER E WITH BREVE"},
    {0x0115, 0, "LATIN SMALL LETTER E WITH BREVE"},
    {0x0116, 0, "LATIN CAPITAL LETTER E WITH DOT ABOVE"},
    {0x0117, 0, "LATIN SMALL LETTER E WITH DOT ABOVE"},
    {0x0118, 0, "LATIN CAPITAL LETTER E WITH OGONEK"},
    {0x0119, 0, "LATIN SMALL LETTER E WITH OGONEK"},
    {0x011A, 0, "LATIN CAPITAL LETTER E WITH CARON"},
    {0x011B, 0, "LATIN SMALL LETTER E WITH CARON"},
    {0x011C, 0, "LATIN CAPITAL LETTER G WITH CIRCUMFLEX"},
    {0x011D, 0, "LATIN SMALL LETTER G WITH CIRCUMFLEX"},
    {0x011E, 0, "LATIN CAPITAL LETTER G WITH BREVE"},
    {0x011F, 0, "LATIN SMALL LETTER G WITH BREVE"},
    {0x0120, 0, "LATIN CAPITAL LETTER G WITH DOT ABOVE"},
    {0x0121, 0, "LATIN SMALL LETTER G WITH DOT ABOVE"},
    {0x0122, 0, "LATIN CAPITAL LETTER G WITH CEDILLA"},
    {0x0123, 0, "LATIN SMALL LETTER G WITH CEDILLA"},
    {0x0124, 0, "LATIN CAPITAL LETTER H WITH CIRCUMFLEX"},
    {0x0125, 0, "LATIN SMALL LETTER H WITH CIRCUMFLEX"},
    {0x0126, 0, "LATIN CAPITAL LETTER H WITH STROKE"},
    {0x0127, 0, "LATIN SMALL LETTER H WITH STROKE"},
    {0x0128, 0, "LATIN CAPITAL LETTER I WITH TILDE"},
    {0x0129, 0, "LATIN SMALL LETTER I WITH TILDE"},
    {0x012A, 0, "LATIN CAPITAL LETTER I WITH MACRON"},
    {0x012B, 0, "LATIN SMALL LETTER I WITH MACRON"},
    {0x012C, 0, "LATIN CAPITAL LETTER I WITH BREVE"},
    {0x012D, 0, "LATIN SMALL LETTER I WITH BREVE"},
    {0x012E, 0, "LATIN CAPITAL LETTER I WITH OGONEK"},
    {0x012F, 0, "LATIN SMALL LETTER I WITH OGONEK"},
    {0x0130, 0, "LATIN CAPITAL LETTER I WITH DOT ABOVE"},
    {0x0131, 0, "LATIN SMALL LETTER DOTLESS I"},
    {0x0132, 0, "LATIN CAPITAL LIGATURE IJ"},
    {0x0133, 0, "LATIN SMALL LIGATURE IJ"},
    {0x0134, 0, "LATIN CAPITAL LETTER J WITH CIRCUMFLEX"},
    {0x0135, 0, "LATIN SMALL LETTER J WITH CIRCUMFLEX"},
    {0x0136, 0, "LATIN CAPITAL LETTER K WITH CEDILLA"},
    {0x0137, 0, "LATIN SMALL LETTER K WITH CEDILLA"},
    {0x0138, 0, "LATIN SMALL LETTER KRA"},
    {0x0139, 0, "LATIN CAPITAL LETTER L WITH ACUTE"},
    {0x013A, 0, "LATIN SMALL LETTER L WITH ACUTE"},
    {0x013B, 0, "LATIN CAPITAL LETTER L WITH CEDILLA"},
    {0x013C, 0, "LATIN SMALL LETTER L WITH CEDILLA"},
    {0x013D, 0, "LATIN CAPITAL LETTER L WITH CARON"},
    {0x013E, 0, "LATIN SMALL LETTER L WITH CARON"},
    {0x013F, 0, "LATIN CAPITAL LETTER L WITH MIDDLE DOT"},
    {0x0140, 0, "LATIN SMALL LETTER L WITH MIDDLE DOT"},
    {0x0141, 0, "LATIN CAPITAL LETTER L WITH STROKE"},
    {0x0142, 0, "LATIN SMALL LETTER L WITH STROKE"},
    {0x0143, 0, "LATIN CAPITAL LETTER N WITH ACUTE"},
    {0x0144, 0, "LATIN SMALL LETTER N WITH ACUTE"},
    {0x0145, 0, "LATIN CAPITAL LETTER N WITH CEDILLA"},
    {0x0146, 0, "LATIN SMALL LETTER N WITH CEDILLA"},
    {0x0147, 0, "LATIN CAPITAL LETTER N WITH CARON"},
    {0x0148, 0, "LATIN SMALL LETTER N WITH CARON"},
    {0x0149, 0, "LATIN SMALL LETTER N PRECEDED BY APOSTROPHE"},
    {0x014A, 0, "LATIN CAPITAL LETTER ENG"},
    {0x014B, 0, "LATIN SMALL LETTER ENG"},
    {0x014C, 0, "LATIN CAPITAL LETTER O WITH MACRON"},
    {0x014D, 0, "LATIN SMALL LETTER O WITH MACRON"},
    {0x014E, 0, "LATIN CAPITAL LETTER O WITH BREVE"},
    {0x014F, 0, "LATIN SMALL LETTER O WITH BREVE"},
    {0x0150, 0, "LATIN CAPITAL LETTER O WITH DOUBLE ACUTE"},
    {0x0151, 0, "LATIN SMALL LETTER O WITH DOUBLE ACUTE"},
    {0x0152, 0, "LATIN CAPITAL LIGATURE OE"},
    {0x0153, 0, "LATIN SMALL LIGATURE OE"},
    {0x0154, 0, "LATIN CAPITAL LETTER R WITH ACUTE"},
    {0x0155, 0, "LATIN SMALL LETTER R WITH ACUTE"},
    {0x0156, 0, "LATIN CAPITAL LETTER R WITH CEDILLA"},
    {0x0157, 0, "LATIN SMALL LETTER R WITH CEDILLA"},
    {0x0158, 0, "LATIN CAPITAL LETTER R WITH CARON"},
    {0x0159, 0, "LATIN SMALL LETTER R WITH CARON"},
    {0x015A, 0, "LATIN CAPITAL LETTER S WITH ACUTE"},
    {0x015B, 0, "LATIN SMALL LETTER S WITH ACUTE"},
    {0x015C, 0, "LATIN CAPITAL LETTER S WITH CIRCUMFLEX"},
    {0x015D, 0, "LATIN SMALL LETTER S WITH CIRCUMFLEX"},
    {0x015E, 0, "LATIN CAPITAL LETTER S WITH CEDILLA"},
    {0x015F, 0, "LATIN SMALL LETTER S WITH CEDILLA"},
    {0x0160, 0, "LATIN CAPITAL LETTER S WITH CARON"},
    {0x0161, 0, "LATIN SMALL LETTER S WITH CARON"},
    {0x0162, 0, "LATIN CAPITAL LETTER T WITH CEDILLA"},
    {0x0163, 0, "LATIN SMALL LETTER T WITH CEDILLA"},
    {0x0164, 0, "LATIN CAPITAL LETTER T WITH CARON"},
    {0x0165, 0, "LATIN SMALL LETTER T WITH CARON"},
    {0x0166, 0, "LATIN CAPITAL LETTER T WITH STROKE"},
    {0x0167, 0, "LATIN SMALL LETTER T WITH STROKE"},
    {0x0168, 0, "LATIN CAPITAL LETTER U WITH TILDE"},
    {0x0169, 0, "LATIN SMALL LETTER U WITH TILDE"},
    {0x016A, 0, "LATIN CAPITAL LETTER U WITH MACRON"},
    {0x016B, 0, "LATIN SMALL LETTER U WITH MACRON"},
    {0x016C, 0, "LATIN CAPITAL LETTER U WITH BREVE"},
    {0x016D, 0, "LATIN SMALL LETTER U WITH BREVE"},
    {0x016E, 0, "LATIN CAPITAL LETTER U WITH RING ABOVE"},
    {0x016F, 0, "LATIN SMALL LETTER U WITH RING ABOVE"},
    {0x0170, 0, "LATIN CAPITAL LETTER U WITH DOUBLE ACUTE"},
    {0x0171, 0, "LATIN SMALL LETTER U WITH DOUBLE ACUTE"},
    {0x0172, 0, "LATIN CAPITAL LETTER U WITH OGONEK"},
    {0x0173, 0, "LATIN SMALL LETTER U WITH OGONEK"},
    {0x0174, 0, "LATIN CAPITAL LETTER W WITH CIRCUMFLEX"},
    {0x0175, 0, "LATIN SMALL LETTER W WITH CIRCUMFLEX"},
    {0x0176, 0, "LATIN CAPITAL LETTER Y WITH CIRCUMFLEX"},
    {0x0177, 0, "LATIN SMALL LETTER Y WITH CIRCUMFLEX"},
    {0x0178, 0, "LATIN CAPITAL LETTER Y WITH DIAERESIS"},
    {0x0179, 0, "LATIN CAPITAL LETTER Z WITH ACUTE"},
    {0x017A, 0, "LATIN SMALL LETTER Z WITH ACUTE"},
    {0x017B, 0, "LATIN CAPITAL LETTER Z WITH DOT ABOVE"},
    {0x017C, 0, "LATIN SMALL LETTER Z WITH DOT ABOVE"},
    {0x017D, 0, "LATIN CAPITAL LETTER Z WITH CARON"},
    {0x017E, 0, "LATIN SMALL LETTER Z WITH CARON"},
    {0x017F, 0, "LATIN SMALL LETTER LONG S"},
    {0x018F, 0, "LATIN CAPITAL LETTER SCHWA"},
    {0x0259, 0, "LATIN SMALL LETTER SCHWA"},
    {0x0300, 230, "COMBINING GRAVE ACCENT"},
    {0x0301, 230, "COMBINING ACUTE ACCENT"},
    {0x0302, 230, "COMBINING CIRCUMFLEX ACCENT"},
    {0x0303, 230, "COMBINING TILDE"},
    {0x0304, 230, "COMBINING MACRON"},
    {0x0305, 230, "COMBINING OVERLINE"},
    {0x0306, 230, "COMBINING BREVE"},
    {0x0307, 230, "COMBINING DOT ABOVE"},
    {0x0308, 230, "COMBINING DIAERESIS"},
    {0x0309, 230, "COMBINING HOOK ABOVE"},
    {0x030A, 230, "COMBINING RING ABOVE"},
    {0x030B, 230, "COMBINING DOUBLE ACUTE ACCENT"},
    {0x030C, 230, "COMBINING CARON"},
    {0x030D, 230, "COMBINING VERTICAL LINE ABOVE"},
    {0x030E, 230, "COMBINING DOUBLE VERTICAL LINE ABOVE"},
    {0x030F, 230, "COMBINING DOUBLE GRAVE ACCENT"},
    {0x0310, 230, "COMBINING CANDRABINDU"},
    {0x0311, 230, "COMBINING INVERTED BREVE"},
    {0x0312, 230, "COMBINING TURNED COMMA ABOVE"},
    {0x0313, 230, "COMBINING COMMA ABOVE"},
    {0x0314, 230, "COMBINING REVERSED COMMA ABOVE"},
    {0x0315, 232, "COMBINING COMMA ABOVE RIGHT"},
    {0x0316, 220, "COMBINING GRAVE ACCENT BELOW"},
    {0x0317, 220, "COMBINING ACUTE ACCENT BELOW"},
    {0x0318, 220, "COMBINING LEFT TACK BELOW"},
    {0x0319, 220, "COMBINING RIGHT TACK BELOW"},
    {0x031A, 232, "COMBINING LEFT ANGLE ABOVE"},
    {0x031B, 216, "COMBINING HORN"},
    {0x031C, 220, "COMBINING LEFT HALF RING BELOW"},
    {0x031D, 220, "COMBINING UP TACK BELOW"},
    {0x031E, 220, "COMBINING DOWN TACK BELOW"},
    {0x031F, 220, "COMBINING PLUS SIGN BELOW"},
    {0x0320, 220, "COMBINING MINUS SIGN BELOW"},
    {0x0321, 202, "COMBINING PALATALIZED HOOK BELOW"},
    {0x0322, 202, "COMBINING RETROFLEX HOOK BELOW"},
    {0x0323, 220, "COMBINING DOT BELOW"},
    {0x0324, 220, "COMBINING DIAERESIS BELOW"},
    {0x0325, 220, "COMBINING RING BELOW"},
    {0x0326, 220, "COMBINING COMMA BELOW"},
    {0x0327, 202, "COMBINING CEDILLA"},
    {0x0328, 202, "COMBINING OGONEK"},
    {0x0329, 220, "COMBINING VERTICAL LINE BELOW"},
    {0x032A, 220, "COMBINING BRIDGE BELOW"},
    {0x032B, 220, "COMBINING INVERTED DOUBLE ARCH BELOW"},
    {0x032C, 220, "COMBINING CARON BELOW"},
    {0x032D, 220, "COMBINING CIRCUMFLEX ACCENT BELOW"},
    {0x032E, 220, "COMBINING BREVE BELOW"},
    {0x032F, 220, "COMBINING INVERTED BREVE BELOW"},
    {0x0330, 220, "COMBINING TILDE BELOW"},
    {0x0331, 220, "COMBINING MACRON BELOW"},
    {0x0332, 220, "COMBINING LOW LINE"},
    {0x0333, 220, "COMBINING DOUBLE LOW LINE"},
    {0x0334, 1, "COMBINING TILDE OVERLAY"},
    {0x0335, 1, "COMBINING SHORT STROKE OVERLAY"},
    {0x0336, 1, "COMBINING LONG STROKE OVERLAY"},
    {0x0337, 1, "COMBINING SHORT SOLIDUS OVERLAY"},
    {0x0338, 1, "COMBINING LONG SOLIDUS OVERLAY"},
    {0x0339, 220, "COMBINING RIGHT HALF RING BELOW"},
    {0x033A, 220, "COMBINING INVERTED BRIDGE BELOW"},
    {0x033B, 220, "COMBINING SQUARE BELOW"},
    {0x033C, 220, "COMBINING SEAGULL BELOW"},
    {0x033D, 230, "COMBINING X ABOVE"},
    {0x033E, 230, "COMBINING VERTICAL TILDE"},
    {0x033F, 230, "COMBINING DOUBLE OVERLINE"},
    {0x0340, 230, "COMBINING GRAVE TONE MARK"},
    {0x0341, 230, "COMBINING ACUTE TONE MARK"},
    {0x0342, 230, "COMBINING GREEK PERISPOMENI"},
    {0x0343, 230, "COMBINING GREEK KORONIS"},
    {0x0344, 230, "COMBINING GREEK DIALYTIKA TONOS"},
    {0x0345, 240, "COMBINING GREEK YPOGEGRAMMENI"},
    {0x0346, 230, "COMBINING BRIDGE ABOVE"},
    {0x0347, 220, "COMBINING EQUALS SIGN BELOW"},
    {0x0348, 220, "COMBINING DOUBLE VERTICAL LINE BELOW"},
    {0x0349, 220, "COMBINING LEFT ANGLE BELOW"},
    {0x034A, 230, "COMBINING NOT TILDE ABOVE"},
    {0x034B, 230, "COMBINING HOMOTHETIC ABOVE"},
    {0x034C, 230, "COMBINING ALMOST EQUAL TO ABOVE"},
    {0x034D, 220, "COMBINING LEFT RIGHT ARROW BELOW"},
    {0x034E, 220, "COMBINING UPWARDS ARROW BELOW"},
    {0x034F, 0, "COMBINING GRAPHEME JOINER"},
    {0x0350, 230, "COMBINING RIGHT ARROWHEAD ABOVE"},
    {0x0351, 230, "COMBINING LEFT HALF RING ABOVE"},
    {0x0352, 230, "COMBINING FERMATA"},
    {0x0353, 220, "COMBINING X BELOW"},
    {0x0354, 220, "COMBINING LEFT ARROWHEAD BELOW"},
    {0x0355, 220, "COMBINING RIGHT ARROWHEAD BELOW"},
    {0x0356, 220, "COMBINING RIGHT ARROWHEAD AND UP ARROWHEAD BELOW"},
    {0x0357, 230, "COMBINING RIGHT HALF RING ABOVE"},
    {0x0358, 232, "COMBINING DOT ABOVE RIGHT"},
    {0x0359, 220, "COMBINING ASTERISK BELOW"},
    {0x035A, 220, "COMBINING DOUBLE RING BELOW"},
    {0x035B, 230, "COMBINING ZIGZAG ABOVE"},
    {0x035C, 233, "COMBINING DOUBLE BREVE BELOW"},
    {0x035D, 234, "COMBINING DOUBLE BREVE"},
    {0x035E, 234, "COMBINING DOUBLE MACRON"},
    {0x035F, 233, "COMBINING DOUBLE MACRON BELOW"},
    {0x0360, 234, "COMBINING DOUBLE TILDE"},
    {0x0361, 234, "COMBINING DOUBLE INVERTED BREVE"},
    {0x0362, 233, "COMBINING DOUBLE RIGHTWARDS ARROW BELOW"},
    {0x0363, 230, "COMBINING LATIN SMALL LETTER A"},
    {0x0364, 230, "COMBINING LATIN SMALL LETTER E"},
    {0x0365, 230, "COMBINING LATIN SMALL LETTER I"},
    {0x0366, 230, "COMBINING LATIN SMALL LETTER O"},
    {0x0367, 230, "COMBINING LATIN SMALL LETTER U"},
    {0x0368, 230, "COMBINING LATIN SMALL LETTER C"},
    {0x0369, 230, "COMBINING LATIN SMALL LETTER D"},
    {0x036A, 230, "COMBINING LATIN SMALL LETTER H"},
    {0x036B, 230, "COMBINING LATIN SMALL LETTER M"},
    {0x036C, 230, "COMBINING LATIN SMALL LETTER R"},
    {0x036D, 230, "COMBINING LATIN SMALL LETTER T"},
    {0x036E, 230, "COMBINING LATIN SMALL LETTER V"},
    {0x036F, 230, "COMBINING LATIN SMALL LETTER X"},
    {0x1EBC, 0, "LATIN CAPITAL LETTER E WITH TILDE"},
    {0x1EBD, 0, "LATIN SMALL LETTER E WITH TILDE"},
};

const DecompositionRecord kDecompositions[] = {
    {0x00C0, 0x0041, 0x0300},
    {0x00C1, 0x0041, 0x0301},
    {0x00C2, 0x0041, 0x0302},
    {0x00C3, 0x0041, 0x0303},
    {0x00C4, 0x0041, 0x0308},
    {0x00C5, 0x0041, 0x030A},
    {0x00C7, 0x0043, 0x0327},
    {0x00C8, 0x0045, 0x0300},
    {0x00C9, 0x0045, 0x0301},
    {0x00CA, 0x0045, 0x0302},
    {0x00CB, 0x0045, 0x0308},
    {0x00CC, 0x0049, 0x0300},
    {0x00CD, 0x0049, 0x0301},
    {0x00CE, 0x0049, 0x0302},
    {0x00CF, 0x0049, 0x0308},
    {0x00D1, 0x004E, 0x0303},
    {0x00D2, 0x004F, 0x0300},
    {0x00D3, 0x004F, 0x0301},
    {0x00D4, 0x004F, 0x0302},
    {0x00D5, 0x004F, 0x0303},
    {0x00D6, 0x004F, 0x0308},
    {0x00D9, 0x0055, 0x0300},
    {0x00DA, 0x0055, 0x0301},
    {0x00DB, 0x0055, 0x0302},
    {0x00DC, 0x0055, 0x0308},
    {0x00DD, 0x0059, 0x0301},
    {0x00E0, 0x0061, 0x0300},
    {0x00E1, 0x0061, 0x0301},
    {0x00E2, 0x0061, 0x0302},
    {0x00E3, 0x0061, 0x0303},
    {0x00E4, 0x0061, 0x0308},
    {0x00E5, 0x0061, 0x030A},
    {0x00E7, 0x0063, 0x0327},
    {0x00E8, 0x0065, 0x0300},
    {0x00E9, 0x0065, 0x0301},
    {0x00EA, 0x0065, 0x0302},
    {0x00EB, 0x0065, 0x0308},
    {0x00EC, 0x0069, 0x0300},
    {0x00ED, 0x0069, 0x0301},
    {0x00EE, 0x0069, 0x0302},
    {0x00EF, 0x0069, 0x0308},
    {0x00F1, 0x006E, 0x0303},
    {0x00F2, 0x006F, 0x0300},
    {0x00F3, 0x006F, 0x0301},
    {0x00F4, 0x006F, 0x0302},
    {0x00F5, 0x006F, 0x0303},
    {0x00F6, 0x006F, 0x0308},
    {0x00F9, 0x0075, 0x0300},
    {0x00FA, 0x0075, 0x0301},
    {0x00FB, 0x0075, 0x0302},
    {0x00FC, 0x0075, 0x0308},
    {0x00FD, 0x0079, 0x0301},
    {0x00FF, 0x0079, 0x0308},
    {0x0100, 0x0041, 0x0304},
    {0x0101, 0x0061, 0x0304},
    {0x0102, 0x0041, 0x0306},
    {0x0103, 0x0061, 0x0306},
    {0x0104, 0x0041, 0x0328},
    {0x0105, 0x0061, 0x0328},
    {0x0106, 0x0043, 0x0301},
    {0x0107, 0x0063, 0x0301},
    {0x0108, 0x0043, 0x0302},
    {0x0109, 0x0063, 0x0302},
    {0x010A, 0x0043, 0x0307},
    {0x010B, 0x0063, 0x0307},
    {0x010C, 0x0043, 0x030C},
    {0x010D, 0x0063, 0x030C},
    {0x010E, 0x0044, 0x030C},
    {0x010F, 0x0064, 0x030C},
    {0x0112, 0x0045, 0x0304},
    {0x0113, 0x0065, 0x0304},
    {0x0114, 0x0045, 0x0306},
    {0x0115, 0x0065, 0x0306},
    {0x0116, 0x0045, 0x0307},
    {0x0117, 0x0065, 0x0307},
    {0x0118, 0x0045, 0x0328},
    {0x0119, 0x0065, 0x0328},
    {0x011A, 0x0045, 0x030C},
    {0x011B, 0x0065, 0x030C},
    {0x011C, 0x0047, 0x0302},
    {0x011D, 0x0067, 0x0302},
    {0x011E, 0x0047, 0x0306},
    {0x011F, 0x0067, 0x0306},
    {0x0120, 0x0047, 0x0307},
    {0x0121, 0x0067, 0x0307},
    {0x0122, 0x0047, 0x0327},
    {0x0123, 0x0067, 0x0327},
    {0x0124, 0x0048, 0x0302},
    {0x0125, 0x0068, 0x0302},
    {0x0128, 0x0049, 0x0303},
    {0x0129, 0x0069, 0x0303},
    {0x012A, 0x0049, 0x0304},
    {0x012B, 0x0069, 0x0304},
    {0x012C, 0x0049, 0x0306},
    {0x012D, 0x0069, 0x0306},
    {0x012E, 0x0049, 0x0328},
    {0x012F, 0x0069, 0x0328},
    {0x0130, 0x0049, 0x0307},
    {0x0134, 0x004A, 0x0302},
    {0x0135, 0x006A, 0x0302},
    {0x0136, 0x004B, 0x0327},
    {0x0137, 0x006B, 0x0327},
    {0x0139, 0x004C, 0x0301},
    {0x013A, 0x006C, 0x0301},
    {0x013B, 0x004C, 0x0327},
    {0x013C, 0x006C, 0x0327},
    {0x013D, 0x004C, 0x030C},
    {0x013E, 0x006C, 0x030C},
    {0x0143, 0x004E, 0x0301},
    {0x0144, 0x006E, 0x0301},
    {0x0145, 0x004E, 0x0327},
    {0x0146, 0x006E, 0x0327},
    {0x0147, 0x004E, 0x030C},
    {0x0148, 0x006E, 0x030C},
    {0x014C, 0x004F, 0x0304},
    {0x014D, 0x006F, 0x0304},
    {0x014E, 0x004F, 0x0306},
    {0x014F, 0x006F, 0x0306},
    {0x0150, 0x004F, 0x030B},
    {0x0151, 0x006F, 0x030B},
    {0x0154, 0x0052, 0x0301},
    {0x0155, 0x0072, 0x0301},
    {0x0156, 0x0052, 0x0327},
    {0x0157, 0x0072, 0x0327},
    {0x0158, 0x0052, 0x030C},
    {0x0159, 0x0072, 0x030C},
    {0x015A, 0x0053, 0x0301},
    {0x015B, 0x0073, 0x0301},
    {0x015C, 0x0053, 0x0302},
    {0x015D, 0x0073, 0x0302},
    {0x015E, 0x0053, 0x0327},
    {0x015F, 0x0073, 0x0327},
    {0x0160, 0x0053, 0x030C},
    {0x0161, 0x0073, 0x030C},
    {0x0162, 0x0054, 0x0327},
    {0x0163, 0x0074, 0x0327},
    {0x0164, 0x0054, 0x030C},
    {0x0165, 0x0074, 0x030C},
    {0x0168, 0x0055, 0x0303},
    {0x0169, 0x0075, 0x0303},
    {0x016A, 0x0055, 0x0304},
    {0x016B, 0x0075, 0x0304},
    {0x016C, 0x0055, 0x0306},
    {0x016D, 0x0075, 0x0306},
    {0x016E, 0x0055, 0x030A},
    {0x016F, 0x0075, 0x030A},
    {0x0170, 0x0055, 0x030B},
    {0x0171, 0x0075, 0x030B},
    {0x0172, 0x0055, 0x0328},
    {0x0173, 0x0075, 0x0328},
    {0x0174, 0x0057, 0x0302},
    {0x0175, 0x0077, 0x0302},
    {0x0176, 0x0059, 0x0302},
    {0x0177, 0x0079, 0x0302},
    {0x0178, 0x0059, 0x0308},
    {0x0179, 0x005A, 0x0301},
    {0x017A, 0x007A, 0x0301},
    {0x017B, 0x005A, 0x0307},
    {0x017C, 0x007A, 0x0307},
    {0x017D, 0x005A, 0x030C},
    {0x017E, 0x007A, 0x030C},
    {0x0344, 0x0308, 0x0301},
    {0x1EBC, 0x0045, 0x0303},
    {0x1EBD, 0x0065, 0x0303},
};

std::span<const CodepointRecord> codepoint_records() { return kCodepointRecords; }
std::span<const DecompositionRecord> decomposition_records() { return kDecompositions; }

}  // namespace idu::unicode::detail
