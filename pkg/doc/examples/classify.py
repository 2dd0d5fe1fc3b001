from spherical_classes.catalog import certify_dimension_identity, spherical_classes

for d in spherical_classes('F', 4):
    w = certify_dimension_identity(d)
    print("%-12s %-10s dim %2d  w = %s" % (d.name, d.kind, d.expected_dim,
                                           " ".join(map(str, w.word))))
