"""Reading and writing the JSON payloads of the command-line program."""

#  MONCAT, computes colimits of monoids in monoidal categories.
#  Copyright (C) 2023 The MONCAT authors
#
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <https://www.gnu.org/licenses/>.

import json
import logging
from pathlib import Path
from typing import IO, Any, List, Union

from moncat.category import Morphism, Object, Pair
from moncat.custom_types import File
from moncat.finab import AbMor, FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.monoid import MonoidMorphism, MonoidObject, finab_ring, finset_monoid
from moncat.smith import int_matrix


class SchemaError(ValueError):
    """An error indicating that a payload is not valid JSON or does not describe the expected objects."""
    pass


def load_json(f: Union[File, IO]) -> dict:
    """
    Read a JSON payload.

    :param f: The file pointer or path to read from.
    :return: The top-level JSON object.
    :raises SchemaError: if the file is not JSON or its top level is not an object.
    """
    try:
        if isinstance(f, (str, Path)):
            with open(f) as file:
                payload = json.load(file)
        else:
            payload = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"Malformed JSON: {e}") from e

    if not isinstance(payload, dict):
        raise SchemaError(f"The payload must be a JSON object, got {type(payload).__name__}.")

    return payload


def dumps(json_dict: Any) -> str:
    """Serialise with a fixed layout so that equal results give byte-identical output."""
    return json.dumps(json_dict, indent=2, ensure_ascii=False)


def save_json(json_dict: Any, f: Union[File, IO]):
    """
    Write a JSON document.

    :param json_dict: The JSON friendly object.
    :param f: The file pointer or path to write to.
    """
    if isinstance(f, (str, Path)):
        with open(f, 'w') as file:
            file.write(dumps(json_dict) + '\n')
    else:
        f.write(dumps(json_dict) + '\n')


def require(json_dict: dict, key: str, where: str) -> Any:
    if not isinstance(json_dict, dict):
        raise SchemaError(f"Expected a JSON object for {where}, got {json_dict!r}.")

    if key not in json_dict:
        raise SchemaError(f"Missing key '{key}' in {where}.")

    return json_dict[key]


def parse_object(backend_name: str, json_value: Any, where: str) -> Object:
    """
    A finite set is `{"size": n}` (optionally with "labels") or just `n`; an abelian group is
    `{"gens": g, "relations": [[...], ...]}` with one list per relation, or just `g` for Z^g.
    """
    try:
        if backend_name == FinSet.name:
            return FinSetObj(json_value) if isinstance(json_value, int) else FinSetObj.from_json(json_value)

        return PresentedAbGroup(json_value) if isinstance(json_value, int) else PresentedAbGroup.from_json(json_value)
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"Invalid object in {where}: {e}") from e


def parse_monoid(json_dict: dict, where='monoid') -> MonoidObject:
    """
    A FinSet monoid is `{"backend": "finset", "table": [[...]], "unit": e}` with optional "labels" and "name";
    `"mult"` is accepted in place of "table" so that `MonoidObject.to_json` output reads back in.
    A ring is `{"backend": "finab", "carrier": group, "mult": structure constants, "unit": coordinates}`.
    """
    if not isinstance(json_dict, dict):
        raise SchemaError(f"Expected a JSON object for {where}, got {json_dict!r}.")

    backend_name = json_dict.get('backend', FinSet.name)
    name = str(json_dict.get('name', ''))

    try:
        if backend_name == FinSet.name:
            table = json_dict['table'] if 'table' in json_dict else require(json_dict, 'mult', where)
            labels = json_dict.get('labels')

            if labels is None and isinstance(json_dict.get('carrier'), dict):
                labels = json_dict['carrier'].get('labels')

            return finset_monoid(table, int(require(json_dict, 'unit', where)), labels=labels, name=name)
        elif backend_name == FinAb.name:
            group = parse_object(FinAb.name, require(json_dict, 'carrier', where), f"{where}.carrier")
            structure = int_matrix(require(json_dict, 'mult', where), rows=group.gens, cols=group.gens ** 2)

            return finab_ring(group, structure, [int(x) for x in require(json_dict, 'unit', where)], name=name)
        else:
            raise SchemaError(f"Unknown backend '{backend_name}' in {where}, expected one of "
                              f"{[FinSet.name, FinAb.name]}.")
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise SchemaError(f"Invalid {where}: {e}") from e


def parse_morphism(monoid_backend: str, json_value: Any, source: Object, target: Object, where: str) -> Morphism:
    """A FinSet morphism is its table of images; a group homomorphism is its matrix, one row per target generator."""
    try:
        if monoid_backend == FinSet.name:
            return FinSetMor(source, target, [int(x) for x in json_value])

        return AbMor(source, target, int_matrix(json_value, rows=target.gens, cols=source.gens))
    except (TypeError, ValueError, IndexError) as e:
        raise SchemaError(f"Invalid morphism in {where}: {e}") from e


def parse_pairs(monoid: MonoidObject, json_dict: dict) -> List[Pair]:
    """
    The parallel pairs X -> A to coequalize: either a single `{"source": X, "alpha": ..., "beta": ...}` at the top
    level or a list of them under "pairs".
    """
    backend_name = monoid.backend.name
    entries = require(json_dict, 'pairs', 'payload') if 'pairs' in json_dict else [json_dict]

    if not isinstance(entries, list) or not entries:
        raise SchemaError("'pairs' must be a non-empty list.")

    pairs = []

    for i, entry in enumerate(entries):
        where = f"pairs[{i}]" if 'pairs' in json_dict else 'payload'
        source = parse_object(backend_name, require(entry, 'source', where), f"{where}.source")
        alpha = parse_morphism(backend_name, require(entry, 'alpha', where), source, monoid.carrier, f"{where}.alpha")
        beta = parse_morphism(backend_name, require(entry, 'beta', where), source, monoid.carrier, f"{where}.beta")
        pairs.append((alpha, beta))

    logging.debug(f"Parsed {len(pairs)} pair(s) into {monoid}.")

    return pairs


def parse_monoid_morphism(json_dict: dict, where='morphism') -> MonoidMorphism:
    """`{"source": monoid, "target": monoid, "map": table or matrix}`."""
    source = parse_monoid(require(json_dict, 'source', where), f"{where}.source")
    target = parse_monoid(require(json_dict, 'target', where), f"{where}.target")

    if source.backend.name != target.backend.name:
        raise SchemaError(f"The source and target of {where} live in different categories.")

    morphism = parse_morphism(source.backend.name, require(json_dict, 'map', where), source.carrier, target.carrier,
                              f"{where}.map")

    return MonoidMorphism(source, target, morphism)


def parse_finite_ring(json_dict: dict, where='ring') -> MonoidObject:
    ring = parse_monoid(json_dict, where)

    if ring.backend.name != FinAb.name or not ring.carrier.is_finite:
        raise SchemaError(f"{where} must be a ring with a finite additive group.")

    return ring


def parse_finite_monoid(json_dict: dict, where='monoid') -> MonoidObject:
    monoid = parse_monoid(json_dict, where)

    if monoid.backend.name != FinSet.name:
        raise SchemaError(f"{where} must be a monoid in {FinSet.name}.")

    return monoid

