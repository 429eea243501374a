"""数据模块：JSON 夹具读写"""
from .fixtures import (
    basis_fixture,
    decode_any_pair,
    decode_basis,
    decode_lift,
    decode_lifted,
    decode_pair,
    decode_poly,
    decode_symbol_pair,
    decode_unit_pair,
    dump_fixture,
    lift_fixture,
    lifted_fixture,
    load_fixture,
    pair_fixture,
    parse_fixture,
    poly_fixture,
    read_fixture,
    save_fixture,
    symbol_pair_fixture,
)

__all__ = [
    'basis_fixture',
    'decode_any_pair',
    'decode_basis',
    'decode_lift',
    'decode_lifted',
    'decode_pair',
    'decode_poly',
    'decode_symbol_pair',
    'decode_unit_pair',
    'dump_fixture',
    'lift_fixture',
    'lifted_fixture',
    'load_fixture',
    'pair_fixture',
    'parse_fixture',
    'poly_fixture',
    'read_fixture',
    'save_fixture',
    'symbol_pair_fixture',
]
