//! Bundled benchmark texts.
//!
//! Three short pages exercising different formatting: prose with mixed
//! case, tabular digits and punctuation, and code-like indented text. All
//! lines stay under 45 columns so every page fits the 200-dpi grid without
//! wrapping, keeping ground truth and rendered layout in step.

/// One bundled text with a stable identifier used in reports.
#[derive(Clone, Copy, Debug)]
pub struct CorpusText {
    pub id: &'static str,
    pub text: &'static str,
}

const PROSE: &str = "\
The quick brown fox jumps over a lazy dog\n\
while Pack my box with five dozen jugs sat\n\
unread on the shelf. Printing reached the\n\
small town late, and the first press runs\n\
were uneven: smudged serifs, pale ink, and\n\
margins that wandered from page to page.\n\
Still, readers kept every copy they could\n\
find, because even a blurry word was worth\n\
more than a blank sheet.";

const FIGURES: &str = "\
Invoice 4821 (March 7)\n\
---------------------------------------\n\
2 reams bond paper ....... 11.90\n\
5 ink cartridges ......... 63.25\n\
1 staple refill .......... 2.04\n\
Subtotal ................. 77.19\n\
Tax (8.25%) .............. 6.37\n\
TOTAL .................... 83.56\n\
Paid by check #1077; net 30 days.\n\
Questions? Call 555-0142, ext. 9.";

const LISTING: &str = "\
def scale(page, factor):\n\
    \"\"\"Resize a page by factor.\"\"\"\n\
    w = int(page.w * factor)\n\
    h = int(page.h * factor)\n\
    if w < 1 or h < 1:\n\
        raise ValueError(factor)\n\
    return page.resize((w, h))\n\
\n\
for f in [0.5, 0.35, 0.1]:\n\
    print(scale(doc, f).size)";

const TEXTS: [CorpusText; 3] = [
    CorpusText { id: "prose", text: PROSE },
    CorpusText { id: "figures", text: FIGURES },
    CorpusText { id: "listing", text: LISTING },
];

/// All bundled texts in report order.
pub fn all() -> &'static [CorpusText] {
    &TEXTS
}

/// Looks up a bundled text by id.
pub fn by_id(id: &str) -> Option<&'static str> {
    TEXTS.iter().find(|t| t.id == id).map(|t| t.text)
}
