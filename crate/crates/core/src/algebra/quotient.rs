use super::{Element, Family, Generator, Word};

/// Image of an element of the full sphere in the quotient algebra.
///
/// Words containing `x_i` or `x_i*` with `i < n` vanish; `x_n` is renamed
/// `y_{n+1}`; the `y_i` are untouched.
pub fn quotient_map(e: &Element, n: u32) -> Element {
    e.map_words(|w| {
        w.letters()
            .iter()
            .map(|g| match g.family {
                Family::Y => Some(*g),
                Family::X if g.index == n => Some(Generator {
                    family: Family::Y,
                    index: n + 1,
                    starred: g.starred,
                }),
                Family::X => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Word::new)
    })
}
