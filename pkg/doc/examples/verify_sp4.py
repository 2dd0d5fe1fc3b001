from spherical_classes.catalog import spherical_classes
from spherical_classes.matgrp import make_group, verify_involution_criterion

G = make_group('C', 2, 5)
for d in spherical_classes('C', 2)[:2]:
    report = verify_involution_criterion(G, d)
    print("%s: %d cells, all involutions: %s, max value %d of %d"
          % (d, len(report.cells), report.all_involutions,
             report.max_value, d.expected_dim))
