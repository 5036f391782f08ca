#!/usr/bin/env python3
"""Independent straight-line oracle for the frozen test vectors.

Uses only hashlib/hmac and Python integers; shares no code with the C++
library. Run it and paste the printed values into tests/test_vectors.hpp.
"""
import base64
import hashlib
import hmac

P, Q, G = 23, 11, 2


def enc_decimal(n):
    return str(n).encode()


def enc_be(n):
    if n == 0:
        return b"\x00"
    return n.to_bytes((n.bit_length() + 7) // 8, "big")


PROFILES = {
    "paper-compat": dict(h="sha1", enc=enc_decimal, reduce_p=True),
    "modern-default": dict(h="sha256", enc=enc_be, reduce_p=False),
}


def keystream_xor(hname, key, data):
    out = bytearray()
    i = 0
    while len(out) < len(data):
        out += hashlib.new(hname, key + i.to_bytes(4, "big")).digest()
        i += 1
    return bytes(a ^ b for a, b in zip(data, out))


def split(k):
    h = len(k) // 2
    return k[:h], k[h:]


def signcrypt(scheme, prof, xa, yb, x, m):
    pr = PROFILES[prof]
    dh = pow(yb, x, P)
    k = hashlib.new(pr["h"], pr["enc"](dh)).digest()
    k1, k2 = split(k)
    tag = hmac.new(k2, m, pr["h"]).digest()
    r = int.from_bytes(tag, "big") % (P if pr["reduce_p"] else Q)
    if scheme == "schnorr-sc":
        s = (x + r * xa) % Q
    elif scheme == "scs1":
        s = x * pow((r + xa) % Q, -1, Q) % Q
    else:
        s = x * pow((1 + xa * r) % Q, -1, Q) % Q
    c = keystream_xor(pr["h"], k1, m)
    return dh, tag, r, s, c


class Drbg:
    """SHA-256("sckit-drbg" || be64 seed || be64 counter) blocks."""

    def __init__(self, seed):
        self.seed, self.counter, self.buf = seed, 0, b""

    def bytes(self, n):
        while len(self.buf) < n:
            self.buf += hashlib.sha256(b"sckit-drbg" + self.seed.to_bytes(8, "big")
                                       + self.counter.to_bytes(8, "big")).digest()
            self.counter += 1
        out, self.buf = self.buf[:n], self.buf[n:]
        return out


def random_scalar(q, rng):
    bits = q.bit_length()
    nbytes = (bits + 7) // 8
    while True:
        b = bytearray(rng.bytes(nbytes))
        b[0] &= 0xFF >> (nbytes * 8 - bits)
        c = int.from_bytes(b, "big")
        if 1 <= c < q:
            return c


def main():
    d = hashlib.sha1(b"13").digest()
    k1, k2 = split(d)
    print("legacy digest", base64.b64encode(d).decode(),
          base64.b64encode(k1).decode(), base64.b64encode(k2).decode())
    print("modern derive(13)", hashlib.sha256(enc_be(13)).hexdigest())
    print("modern derive(0x1234)", hashlib.sha256(enc_be(0x1234)).hexdigest())

    key, msg = b"fixed-key", b"fixed message"
    print("hmac-sha1", hmac.new(key, msg, "sha1").hexdigest())
    print("hmac-sha256", hmac.new(key, msg, "sha256").hexdigest())
    print("prefix-sha256", hashlib.sha256(key + msg).hexdigest())

    key, pt = b"0123456789", b"attack at dawn, bring snacks and a 40-byte tail!"
    print("sha1-ctr", keystream_xor("sha1", key, pt).hex())
    print("sha256-ctr", keystream_xor("sha256", key, pt).hex())

    tag = bytes.fromhex("E2726583242AB5CCE58AE1151DB126208F17932F")
    n = int.from_bytes(tag, "big")
    print("tag int", n, n % P)

    m = b"hello signcryption"
    # SCS1/SCS2 use y = g^x; Schnorr signcryption uses y = g^-x.
    for scheme in ("scs1", "scs2", "schnorr-sc"):
        for prof in PROFILES:
            xa, xb, x = 4, 5, 3
            if scheme == "schnorr-sc":
                yb = pow(pow(G, xb, P), -1, P)
            else:
                yb = pow(G, xb, P)
            dh, tag, r, s, c = signcrypt(scheme, prof, xa, yb, x, m)
            print(scheme, prof, "dh", dh, "r", tag.hex(), "r_int", r, "s", s,
                  "c", c.hex())

    # Schnorr signature, x=4 (y = g^x = 16), forced nonce k=7.
    for prof, pr in PROFILES.items():
        xs, k = 4, 7
        r = pow(G, k, P)
        msg = b"schnorr baseline"
        data = len(msg).to_bytes(8, "big") + msg + pr["enc"](r)
        e = int.from_bytes(hashlib.new(pr["h"], data).digest(), "big") % Q
        s = (k - xs * e) % Q
        print("schnorr-sig", prof, "r", r, "e", e, "s", s)



    rng = Drbg(99)
    print("drbg seed 99 scalars q=11", [random_scalar(Q, rng) for _ in range(8)])
    print("drbg seed 0 first 16 bytes", Drbg(0).bytes(16).hex())


if __name__ == "__main__":
    main()
