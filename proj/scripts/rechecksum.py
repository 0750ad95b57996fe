#!/usr/bin/env python3
"""Recompute the checksum field of data/tables.json after hand edits.

The checksum is FNV-1a 64 over the compact, key-sorted dump of the "tables" object,
which is byte-identical to nlohmann::json::dump() on the same document.
"""
import json, sys

path = sys.argv[1] if len(sys.argv) > 1 else 'data/tables.json'
doc = json.load(open(path))
h = 0xcbf29ce484222325
for b in json.dumps(doc['tables'], sort_keys=True, separators=(',', ':')).encode():
    h = ((h ^ b) * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
doc['checksum'] = '%016x' % h
with open(path, 'w') as f:
    json.dump(doc, f, indent=1, sort_keys=True)
    f.write('\n')
print(doc['checksum'])
