#!/usr/bin/env python3
"""Regenerate the benchmark corpus of small hash functions as .pla files.

Writes the 13 benchmark functions into corpus/bench/ and a few
small worked examples into corpus/examples/.  Output is deterministic.
"""

import argparse
import pathlib
import random

MINI_AES_SBOX = [0xE, 0x4, 0xD, 0x1, 0x2, 0xF, 0xB, 0x8,
                 0x3, 0xA, 0x6, 0xC, 0x5, 0x9, 0x0, 0x7]

PRESENT_SBOX = [0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2]

# DES S-boxes, FIPS 46-3 layout: 4 rows x 16 columns each.
DES_SBOXES = [
    [[14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7],
     [0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8],
     [4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0],
     [15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13]],
    [[15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10],
     [3, 13, 4, 7, 15, 2, 8, 14, 12, 0, 1, 10, 6, 9, 11, 5],
     [0, 14, 7, 11, 10, 4, 13, 1, 5, 8, 12, 6, 9, 3, 2, 15],
     [13, 8, 10, 1, 3, 15, 4, 2, 11, 6, 7, 12, 0, 5, 14, 9]],
    [[10, 0, 9, 14, 6, 3, 15, 5, 1, 13, 12, 7, 11, 4, 2, 8],
     [13, 7, 0, 9, 3, 4, 6, 10, 2, 8, 5, 14, 12, 11, 15, 1],
     [13, 6, 4, 9, 8, 15, 3, 0, 11, 1, 2, 12, 5, 10, 14, 7],
     [1, 10, 13, 0, 6, 9, 8, 7, 4, 15, 14, 3, 11, 5, 2, 12]],
    [[7, 13, 14, 3, 0, 6, 9, 10, 1, 2, 8, 5, 11, 12, 4, 15],
     [13, 8, 11, 5, 6, 15, 0, 3, 4, 7, 2, 12, 1, 10, 14, 9],
     [10, 6, 9, 0, 12, 11, 7, 13, 15, 1, 3, 14, 5, 2, 8, 4],
     [3, 15, 0, 6, 10, 1, 13, 8, 9, 4, 5, 11, 12, 7, 2, 14]],
    [[2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9],
     [14, 11, 2, 12, 4, 7, 13, 1, 5, 0, 15, 10, 3, 9, 8, 6],
     [4, 2, 1, 11, 10, 13, 7, 8, 15, 9, 12, 5, 6, 3, 0, 14],
     [11, 8, 12, 7, 1, 14, 2, 13, 6, 15, 0, 9, 10, 4, 5, 3]],
    [[12, 1, 10, 15, 9, 2, 6, 8, 0, 13, 3, 4, 14, 7, 5, 11],
     [10, 15, 4, 2, 7, 12, 9, 5, 6, 1, 13, 14, 0, 11, 3, 8],
     [9, 14, 15, 5, 2, 8, 12, 3, 7, 0, 4, 10, 1, 13, 11, 6],
     [4, 3, 2, 12, 9, 5, 15, 10, 11, 14, 1, 7, 6, 0, 8, 13]],
    [[4, 11, 2, 14, 15, 0, 8, 13, 3, 12, 9, 7, 5, 10, 6, 1],
     [13, 0, 11, 7, 4, 9, 1, 10, 14, 3, 5, 12, 2, 15, 8, 6],
     [1, 4, 11, 13, 12, 3, 7, 14, 10, 15, 6, 8, 0, 5, 9, 2],
     [6, 11, 13, 8, 1, 4, 10, 7, 9, 5, 0, 15, 14, 2, 3, 12]],
    [[13, 2, 8, 4, 6, 15, 11, 1, 10, 9, 3, 14, 5, 0, 12, 7],
     [1, 15, 13, 8, 10, 3, 7, 4, 12, 5, 6, 11, 0, 14, 9, 2],
     [7, 11, 4, 1, 9, 12, 14, 2, 0, 6, 10, 13, 15, 3, 5, 8],
     [2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11]],
]


def gf_mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a = ((a << 1) ^ 0x11B) if a & 0x80 else (a << 1)
        b >>= 1
    return r


def aes_sbox():
    inv = [0] * 256
    for a in range(1, 256):
        for b in range(1, 256):
            if gf_mul(a, b) == 1:
                inv[a] = b
                break
    box = []
    for x in range(256):
        b = inv[x]
        s = b
        for k in range(1, 5):
            s ^= ((b << k) | (b >> (8 - k))) & 0xFF
        box.append(s ^ 0x63)
    return box


def des_table(box):
    # 6-bit input b1..b6: row = b1 b6, column = b2 b3 b4 b5.
    out = []
    for x in range(64):
        row = ((x >> 4) & 0b10) | (x & 1)
        col = (x >> 1) & 0xF
        out.append(box[row][col])
    return out


def hamming(a, b):
    return bin(a ^ b).count("1")


def avalanche_hash(seed):
    """Min-conflicts search for f: B^8 -> B^8 meeting both avalanche parts."""
    rng = random.Random(seed)
    f = [rng.randrange(256) for _ in range(256)]

    def conflicts(x, v):
        c = 1 if hamming(x, v) < 4 else 0
        for j in range(8):
            if hamming(v, f[x ^ (1 << j)]) < 4:
                c += 1
        return c

    for _ in range(200000):
        bad = [x for x in range(256) if conflicts(x, f[x]) > 0]
        if not bad:
            return f
        x = rng.choice(bad)
        scores = [conflicts(x, v) for v in range(256)]
        best = min(scores)
        f[x] = rng.choice([v for v in range(256) if scores[v] == best])
    raise RuntimeError("avalanche search did not converge")


def check_avalanche(f, n):
    for x in range(1 << n):
        if hamming(x, f[x]) < (n + 1) // 2:
            return False
        for j in range(n):
            if hamming(f[x], f[x ^ (1 << j)]) < (n + 1) // 2:
                return False
    return True


def write_table(path, name, table, n, m, comment):
    lines = [f"# {name}", f"# {comment}", f".i {n}", f".o {m}", f".p {len(table)}"]
    for x, y in enumerate(table):
        lines.append(f"{x:0{n}b} {y:0{m}b}")
    lines.append(".e")
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "corpus"))
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()

    root = pathlib.Path(args.out)
    t1 = root / "bench"
    ex = root / "examples"
    t1.mkdir(parents=True, exist_ok=True)
    ex.mkdir(parents=True, exist_ok=True)

    for row in sum(DES_SBOXES, []):
        assert sorted(row) == list(range(16))

    aes = aes_sbox()
    assert sorted(aes) == list(range(256))
    assert aes[0x00] == 0x63 and aes[0x01] == 0x7C and aes[0x53] == 0xED
    aes_inv = [0] * 256
    for x, y in enumerate(aes):
        aes_inv[y] = x

    write_table(t1 / "01_aes4_sbox.pla", "4-bit AES S-box", MINI_AES_SBOX, 4, 4, "Mini-AES NibbleSub")
    write_table(t1 / "02_present_sbox.pla", "PRESENT S-box", PRESENT_SBOX, 4, 4, "PRESENT 4-bit S-box")
    for i, box in enumerate(DES_SBOXES, start=1):
        write_table(t1 / f"{i + 2:02d}_des_sbox{i}.pla", f"DES S-box {i}", des_table(box), 6, 4,
                    "input b1..b6, row = b1b6, column = b2b3b4b5")
    write_table(t1 / "11_aes_sbox.pla", "AES S-box", aes, 8, 8, "FIPS-197 SubBytes")
    write_table(t1 / "12_aes_inv_sbox.pla", "AES inverse S-box", aes_inv, 8, 8, "FIPS-197 InvSubBytes")

    h = avalanche_hash(args.seed)
    assert check_avalanche(h, 8)
    write_table(t1 / "13_hash8.pla", "8-bit avalanche hash", h, 8, 8,
                f"min-conflicts search, seed {args.seed}")

    # 4-bit worked example: bitwise complement, 0110 -> 1001.
    write_table(ex / "hash4.pla", "4-bit example hash", [x ^ 0xF for x in range(16)], 4, 4,
                "weak 4-bit hash, outputs the complement of the input")
    (ex / "and.pla").write_text("# AND with don't-cares\n.i 2\n.o 1\n.p 3\n0- 0\n-0 0\n11 1\n.e\n")
    (ex / "const0.pla").write_text("# constant zero\n.i 1\n.o 1\n.p 2\n0 0\n1 0\n.e\n")
    (ex / "or.pla").write_text("# OR as minterms\n.i 2\n.o 1\n.p 4\n00 0\n01 1\n10 1\n11 1\n.e\n")


if __name__ == "__main__":
    main()
