// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Single-color set extension finders.
//!
//! For distinct sets `A` and `B` there is at most one color `c` with
//! `A = B ∪ {c}` or `B = A ∪ {c}`, and at most one color with
//! `A ∪ {c} = B ∪ {c}`. The degenerate-graph extension uses these to bound
//! how many colors a single assignment can rule out.

use super::{Color, ColorSet};
use crate::error::{Error, Result};

fn check(a: &ColorSet, b: &ColorSet, palette: usize) -> Result<()> {
    if a == b {
        return Err(Error::PreconditionViolated("sets must differ".into()));
    }
    let full = ColorSet::full(palette);
    if !a.is_subset(&full) || !b.is_subset(&full) {
        return Err(Error::PreconditionViolated(format!(
            "sets must lie in the palette 1..={palette}"
        )));
    }
    Ok(())
}

/// The color `c` with `A = B ∪ {c}` or `B = A ∪ {c}`, if one exists.
pub fn find_extension_color(a: &ColorSet, b: &ColorSet, palette: usize) -> Result<Option<Color>> {
    check(a, b, palette)?;
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if !small.is_subset(big) {
        return Ok(None);
    }
    let diff = big.difference(small);
    Ok(if diff.len() == 1 { diff.first() } else { None })
}

/// The color `c` with `A ∪ {c} = B ∪ {c}`, if one exists.
pub fn find_equalizing_color(a: &ColorSet, b: &ColorSet, palette: usize) -> Result<Option<Color>> {
    check(a, b, palette)?;
    let diff = a.xor(b);
    Ok(if diff.len() == 1 { diff.first() } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[Color]) -> ColorSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn extension_examples() {
        assert_eq!(find_extension_color(&s(&[1, 2, 3]), &s(&[1, 2]), 4).unwrap(), Some(3));
        assert_eq!(find_extension_color(&s(&[1, 2]), &s(&[1, 2, 3]), 4).unwrap(), Some(3));
        assert_eq!(find_extension_color(&s(&[1, 2]), &s(&[3, 4]), 4).unwrap(), None);
        assert!(matches!(
            find_extension_color(&s(&[1, 2]), &s(&[1, 2]), 4),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn equalizing_examples() {
        assert_eq!(find_equalizing_color(&s(&[1, 2]), &s(&[1]), 4).unwrap(), Some(2));
        assert_eq!(find_equalizing_color(&s(&[1, 2]), &s(&[3]), 4).unwrap(), None);
        assert_eq!(find_equalizing_color(&s(&[1]), &s(&[2]), 4).unwrap(), None);
        assert!(find_equalizing_color(&s(&[1]), &s(&[1]), 4).is_err());
    }

    #[test]
    fn outside_palette_is_rejected() {
        assert!(find_equalizing_color(&s(&[9]), &s(&[1]), 4).is_err());
    }
}
