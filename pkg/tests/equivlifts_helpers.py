def brute_lifts(d, w_max):
    """All (w+, w-) in the box with matching parity and (w+^2 - w-^2)/2 = d."""
    out = []
    for a in range(w_max + 1):
        for b in range(w_max + 1):
            if (a - b) % 2 == 0 and a * a - b * b == 2 * d:
                out.append((a, b))
    return sorted(out)
