/// Number of inversions of a sequence of distinct values, in `O(n log n)`.
///
/// Bottom-up merge sort on a scratch copy; each time an element of the right
/// run is emitted before the remaining left run, all of those left elements
/// form inversions with it.
pub fn count_inversions_in(values: &[usize]) -> usize {
    let n = values.len();
    if n < 2 {
        return 0;
    }
    let mut src = values.to_vec();
    let mut dst = vec![0; n];
    let mut count = 0;
    let mut width = 1;
    while width < n {
        let mut lo = 0;
        while lo < n {
            let mid = (lo + width).min(n);
            let hi = (lo + 2 * width).min(n);
            count += merge(&src[lo..mid], &src[mid..hi], &mut dst[lo..hi]);
            lo = hi;
        }
        std::mem::swap(&mut src, &mut dst);
        width *= 2;
    }
    count
}

fn merge(left: &[usize], right: &[usize], out: &mut [usize]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    let mut count = 0;
    while i < left.len() && j < right.len() {
        if left[i] <= right[j] {
            out[k] = left[i];
            i += 1;
        } else {
            out[k] = right[j];
            j += 1;
            count += left.len() - i;
        }
        k += 1;
    }
    out[k..k + left.len() - i].copy_from_slice(&left[i..]);
    k += left.len() - i;
    out[k..].copy_from_slice(&right[j..]);
    count
}
