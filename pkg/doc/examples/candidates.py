from spherical_classes.catalog import dimension_bound
from spherical_classes.chevalley import class_dim_semisimple
from spherical_classes.rootsys import (build_root_system,
                                       enumerate_semisimple_candidates)

rs = build_root_system('E', 7)
for s in enumerate_semisimple_candidates(rs, dimension_bound(rs)):
    print("{%s}  %s  dim %d" % (s.label_str(), s.type_name,
                                class_dim_semisimple(rs, s)))
