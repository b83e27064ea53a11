from gradinv.abgroup import GroupMap, SymplecticShape
from gradinv.cocycle import StandardCocycle
from gradinv.cyclotomic import RootOfUnity
from gradinv.homog import HomMapData


def pauli_setup(n):
    """(shape, sigma, T) for the level-n Pauli support."""
    shape = SymplecticShape.pauli(n)
    return shape, StandardCocycle(shape), shape.group


def theta1_map(T):
    return GroupMap(T, T, ((1, 0), (0, -1)))


def theta2_map(T):
    return GroupMap(T, T, ((0, 1), (1, 0)))


def theta3_map(T):
    n = T.orders[0]
    return GroupMap(T, T, ((1, 2), (n // 2, -1)))


def hom(shape, tau, la, lb, mode="anti"):
    return HomMapData(shape, tau, (la, lb), mode)


ONE = RootOfUnity.one()
MINUS = RootOfUnity.minus_one()
