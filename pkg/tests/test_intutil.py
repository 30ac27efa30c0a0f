from cyclofactor import intutil


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(2, 50):
        assert intutil.is_prime(n) == (n in primes)


def test_is_prime_large():
    assert intutil.is_prime(2**61 - 1)
    assert not intutil.is_prime(2**61 + 1)
    assert not intutil.is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_factorint_roundtrip():
    for n in [1, 2, 12, 360, 1024, 3**10, 13**4 - 1, 2**32 - 1]:
        fac = intutil.factorint(n)
        prod = 1
        for p, e in fac.items():
            assert intutil.is_prime(p)
            prod *= p**e
        assert prod == n


def test_euler_phi():
    assert intutil.euler_phi(20) == 8
    assert intutil.euler_phi(80) == 32
    assert intutil.euler_phi(1) == 1
    assert intutil.euler_phi(2**6 * 5) == 2**5 * 4


def test_moebius():
    assert intutil.moebius(10) == 1
    assert intutil.moebius(4) == 0
    assert intutil.moebius(2) == -1
    assert intutil.moebius(1) == 1
    assert intutil.moebius(30) == -1


def test_v2():
    assert intutil.v2(40) == 3
    assert intutil.v2(1) == 0
    assert intutil.v2(2**20) == 20


def test_divisors():
    assert intutil.divisors(20) == [1, 2, 4, 5, 10, 20]


def test_mult_order_int():
    assert intutil.mult_order_int(13, 80) == 4
    assert intutil.mult_order_int(3, 80) == 4
    assert intutil.mult_order_int(2, 5) == 4
