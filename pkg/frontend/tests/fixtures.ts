// Golden payloads captured from the engine (toy 20x2 table, sweep of 3).
// Regenerate with scripts/gen_fixtures.py at the repo root.
export const dataset = {
 "dataset_id": "ds-fixture",
 "n_samples": 26,
 "n_features": 2,
 "feature_names": [
  "size",
  "grade"
 ],
 "class_names": [
  "neg",
  "pos"
 ],
 "train_size": 20,
 "test_size": 6,
 "split_seed": 3,
 "split_ratio": 0.75
} as const;

export const target = {
 "dataset_id": "ds-fixture",
 "source": "builtin",
 "train_accuracy": 1.0,
 "test_accuracy": 0.8333333333333334
} as const;

export const sweep = {
 "schema": "stumplab.sweep/1",
 "seed": 2,
 "iterations": 3,
 "max_estimators": 3,
 "feature_names": [
  "size",
  "grade"
 ],
 "default_index": 1,
 "default_precision": 1,
 "models": [
  {
   "complexity_index": 1,
   "n_estimators": 1,
   "precision": "full",
   "stumps": [
    {
     "feature": 0,
     "threshold": 0.5625,
     "p_left": [
      0.9090909090909091,
      0.09090909090909093
     ],
     "p_right": [
      0.0,
      1.0
     ],
     "weight": 2.9444389791664403,
     "counts": {
      "left": [
       10,
       1
      ],
      "right": [
       0,
       9
      ]
     },
     "degenerate": false,
     "feature_name": "size",
     "uniqueness": "unique",
     "performance": 2.676762708333128
    }
   ],
   "fidelity": {
    "1": 0.95,
    "2": 0.95,
    "3": 0.95,
    "4": 0.95,
    "full": 0.95
   },
   "best_precision": 1
  },
  {
   "complexity_index": 2,
   "n_estimators": 2,
   "precision": "full",
   "stumps": [
    {
     "feature": 0,
     "threshold": 0.5625,
     "p_left": [
      0.9090909090909091,
      0.09090909090909093
     ],
     "p_right": [
      0.0,
      1.0
     ],
     "weight": 2.9444389791664403,
     "counts": {
      "left": [
       10,
       1
      ],
      "right": [
       0,
       9
      ]
     },
     "degenerate": false,
     "feature_name": "size",
     "uniqueness": "original",
     "performance": 2.676762708333128
    },
    {
     "feature": 0,
     "threshold": 0.4375,
     "p_left": [
      1.0,
      0.0
     ],
     "p_right": [
      0.0666666666666667,
      0.9333333333333333
     ],
     "weight": 2.890371757896165,
     "counts": {
      "left": [
       8,
       0
      ],
      "right": [
       2,
       10
      ]
     },
     "degenerate": false,
     "feature_name": "size",
     "uniqueness": "unique",
     "performance": 2.5242580018959844
    }
   ],
   "fidelity": {
    "1": 0.9,
    "2": 0.9,
    "3": 0.9,
    "4": 0.9,
    "full": 0.9
   },
   "best_precision": 1
  },
  {
   "complexity_index": 3,
   "n_estimators": 3,
   "precision": "full",
   "stumps": [
    {
     "feature": 0,
     "threshold": 0.5625,
     "p_left": [
      0.9090909090909091,
      0.09090909090909093
     ],
     "p_right": [
      0.0,
      1.0
     ],
     "weight": 2.9444389791664403,
     "counts": {
      "left": [
       10,
       1
      ],
      "right": [
       0,
       9
      ]
     },
     "degenerate": false,
     "feature_name": "size",
     "uniqueness": "original",
     "performance": 2.676762708333128
    },
    {
     "feature": 0,
     "threshold": 0.4375,
     "p_left": [
      1.0,
      0.0
     ],
     "p_right": [
      0.0666666666666667,
      0.9333333333333333
     ],
     "weight": 2.890371757896165,
     "counts": {
      "left": [
       8,
       0
      ],
      "right": [
       2,
       10
      ]
     },
     "degenerate": false,
     "feature_name": "size",
     "uniqueness": "original",
     "performance": 2.5242580018959844
    },
    {
     "feature": 1,
     "threshold": 0.3125,
     "p_left": [
      1.0,
      0.0
     ],
     "p_right": [
      0.44000000000000006,
      0.5599999999999999
     ],
     "weight": 0.8209805520698303,
     "counts": {
      "left": [
       5,
       0
      ],
      "right": [
       5,
       10
      ]
     },
     "degenerate": false,
     "feature_name": "grade",
     "uniqueness": "unique",
     "performance": 0.5254275533246914
    }
   ],
   "fidelity": {
    "1": 0.95,
    "2": 0.95,
    "3": 0.95,
    "4": 0.95,
    "full": 0.95
   },
   "best_precision": 1
  }
 ]
} as const;

export const session = {
 "session_id": "sess-fixture",
 "sweep_id": "sw-fixture",
 "complexity_index": 3,
 "precision": 2,
 "n_estimators": 3
} as const;

export const summary = {
 "session_id": "sess-fixture",
 "complexity_index": 3,
 "n_estimators": 3,
 "precision": 2,
 "edit_count": 0,
 "fidelity": {
  "1": 0.95,
  "2": 0.95,
  "3": 0.95,
  "4": 0.95,
  "full": 0.95
 },
 "stumps": [
  {
   "feature": 0,
   "threshold": 0.56,
   "p_left": [
    0.9090909090909091,
    0.09090909090909093
   ],
   "p_right": [
    0.0,
    1.0
   ],
   "weight": 2.9444389791664403,
   "counts": {
    "left": [
     10,
     1
    ],
    "right": [
     0,
     9
    ]
   },
   "degenerate": false,
   "feature_name": "size",
   "gini": 0.09090909090909097,
   "performance": 2.676762708333128
  },
  {
   "feature": 0,
   "threshold": 0.44,
   "p_left": [
    1.0,
    0.0
   ],
   "p_right": [
    0.0666666666666667,
    0.9333333333333333
   ],
   "weight": 2.890371757896165,
   "counts": {
    "left": [
     8,
     0
    ],
    "right": [
     2,
     10
    ]
   },
   "degenerate": false,
   "feature_name": "size",
   "gini": 0.1666666666666666,
   "performance": 2.5242580018959844
  },
  {
   "feature": 1,
   "threshold": 0.31,
   "p_left": [
    1.0,
    0.0
   ],
   "p_right": [
    0.44000000000000006,
    0.5599999999999999
   ],
   "weight": 0.8209805520698303,
   "counts": {
    "left": [
     5,
     0
    ],
    "right": [
     5,
     10
    ]
   },
   "degenerate": false,
   "feature_name": "grade",
   "gini": 0.3333333333333333,
   "performance": 0.5254275533246914
  }
 ],
 "feature_importance": [
  {
   "feature": 0,
   "feature_name": "size",
   "score": 5.201020710229113
  },
  {
   "feature": 1,
   "feature_name": "grade",
   "score": 0.5254275533246914
  }
 ],
 "stump_ranking": [
  2,
  1,
  0
 ],
 "default_stump": 2,
 "feature_summaries": [
  {
   "feature": 0,
   "feature_name": "size",
   "importance": 5.201020710229113,
   "boundaries": [
    0.44,
    0.56
   ],
   "segments": [
    {
     "lo": 0.0,
     "hi": 0.44,
     "top_class": 0,
     "top_value": 5.567134466229293,
     "bottom_value": -0.2676762708333128
    },
    {
     "lo": 0.44,
     "hi": 0.56,
     "top_class": 1,
     "top_value": 2.965356578203067,
     "bottom_value": -2.8694541588595386
    },
    {
     "lo": 0.56,
     "hi": 1.0,
     "top_class": 1,
     "top_value": 5.642119286536195,
     "bottom_value": -0.19269145052641107
    }
   ],
   "histogram": [
    {
     "lo": 0.0,
     "hi": 0.05,
     "counts": [
      1,
      0
     ]
    },
    {
     "lo": 0.05,
     "hi": 0.1,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.1,
     "hi": 0.15,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.15,
     "hi": 0.2,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.2,
     "hi": 0.25,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.25,
     "hi": 0.3,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.3,
     "hi": 0.35,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.35,
     "hi": 0.4,
     "counts": [
      3,
      0
     ]
    },
    {
     "lo": 0.4,
     "hi": 0.45,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.45,
     "hi": 0.5,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.5,
     "hi": 0.55,
     "counts": [
      2,
      1
     ]
    },
    {
     "lo": 0.55,
     "hi": 0.6,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.6,
     "hi": 0.65,
     "counts": [
      0,
      3
     ]
    },
    {
     "lo": 0.65,
     "hi": 0.7,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.7,
     "hi": 0.75,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.75,
     "hi": 0.8,
     "counts": [
      0,
      2
     ]
    },
    {
     "lo": 0.8,
     "hi": 0.85,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.85,
     "hi": 0.9,
     "counts": [
      0,
      2
     ]
    },
    {
     "lo": 0.9,
     "hi": 0.95,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.95,
     "hi": 1.0,
     "counts": [
      0,
      2
     ]
    }
   ]
  },
  {
   "feature": 1,
   "feature_name": "grade",
   "importance": 0.5254275533246914,
   "boundaries": [
    0.31
   ],
   "segments": [
    {
     "lo": 0.0,
     "hi": 0.31,
     "top_class": 0,
     "top_value": 0.8209805520698303,
     "bottom_value": -0.0
    },
    {
     "lo": 0.31,
     "hi": 1.0,
     "top_class": 1,
     "top_value": 0.45974910915910494,
     "bottom_value": -0.3612314429107254
    }
   ],
   "histogram": [
    {
     "lo": 0.0,
     "hi": 0.05,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.05,
     "hi": 0.1,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.1,
     "hi": 0.15,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.15,
     "hi": 0.2,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.2,
     "hi": 0.25,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.25,
     "hi": 0.3,
     "counts": [
      1,
      0
     ]
    },
    {
     "lo": 0.3,
     "hi": 0.35,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.35,
     "hi": 0.4,
     "counts": [
      1,
      2
     ]
    },
    {
     "lo": 0.4,
     "hi": 0.45,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.45,
     "hi": 0.5,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.5,
     "hi": 0.55,
     "counts": [
      2,
      1
     ]
    },
    {
     "lo": 0.55,
     "hi": 0.6,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.6,
     "hi": 0.65,
     "counts": [
      2,
      1
     ]
    },
    {
     "lo": 0.65,
     "hi": 0.7,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.7,
     "hi": 0.75,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.75,
     "hi": 0.8,
     "counts": [
      0,
      1
     ]
    },
    {
     "lo": 0.8,
     "hi": 0.85,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.85,
     "hi": 0.9,
     "counts": [
      0,
      3
     ]
    },
    {
     "lo": 0.9,
     "hi": 0.95,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.95,
     "hi": 1.0,
     "counts": [
      0,
      2
     ]
    }
   ]
  }
 ],
 "sample_grids": [
  {
   "stump_index": 0,
   "left": [
    [
     0,
     0.9090909090909091,
     0
    ],
    [
     1,
     0.9090909090909091,
     0
    ],
    [
     2,
     0.9090909090909091,
     0
    ],
    [
     3,
     0.9090909090909091,
     0
    ],
    [
     10,
     0.9090909090909091,
     0
    ],
    [
     12,
     0.9090909090909091,
     0
    ],
    [
     13,
     0.9090909090909091,
     0
    ],
    [
     15,
     0.9090909090909091,
     0
    ],
    [
     17,
     0.9090909090909091,
     0
    ],
    [
     18,
     0.9090909090909091,
     0
    ],
    [
     11,
     0.09090909090909093,
     1
    ]
   ],
   "right": [
    [
     4,
     1.0,
     1
    ],
    [
     5,
     1.0,
     1
    ],
    [
     6,
     1.0,
     1
    ],
    [
     7,
     1.0,
     1
    ],
    [
     8,
     1.0,
     1
    ],
    [
     9,
     1.0,
     1
    ],
    [
     14,
     1.0,
     1
    ],
    [
     16,
     1.0,
     1
    ],
    [
     19,
     1.0,
     1
    ]
   ]
  },
  {
   "stump_index": 1,
   "left": [
    [
     0,
     1.0,
     0
    ],
    [
     1,
     1.0,
     0
    ],
    [
     2,
     1.0,
     0
    ],
    [
     3,
     1.0,
     0
    ],
    [
     10,
     1.0,
     0
    ],
    [
     13,
     1.0,
     0
    ],
    [
     15,
     1.0,
     0
    ],
    [
     18,
     1.0,
     0
    ]
   ],
   "right": [
    [
     4,
     0.9333333333333333,
     1
    ],
    [
     5,
     0.9333333333333333,
     1
    ],
    [
     6,
     0.9333333333333333,
     1
    ],
    [
     7,
     0.9333333333333333,
     1
    ],
    [
     8,
     0.9333333333333333,
     1
    ],
    [
     9,
     0.9333333333333333,
     1
    ],
    [
     11,
     0.9333333333333333,
     1
    ],
    [
     14,
     0.9333333333333333,
     1
    ],
    [
     16,
     0.9333333333333333,
     1
    ],
    [
     19,
     0.9333333333333333,
     1
    ],
    [
     12,
     0.0666666666666667,
     0
    ],
    [
     17,
     0.0666666666666667,
     0
    ]
   ]
  },
  {
   "stump_index": 2,
   "left": [
    [
     0,
     1.0,
     0
    ],
    [
     1,
     1.0,
     0
    ],
    [
     2,
     1.0,
     0
    ],
    [
     3,
     1.0,
     0
    ],
    [
     17,
     1.0,
     0
    ]
   ],
   "right": [
    [
     4,
     0.5599999999999999,
     1
    ],
    [
     5,
     0.5599999999999999,
     1
    ],
    [
     6,
     0.5599999999999999,
     1
    ],
    [
     7,
     0.5599999999999999,
     1
    ],
    [
     8,
     0.5599999999999999,
     1
    ],
    [
     9,
     0.5599999999999999,
     1
    ],
    [
     11,
     0.5599999999999999,
     1
    ],
    [
     14,
     0.5599999999999999,
     1
    ],
    [
     16,
     0.5599999999999999,
     1
    ],
    [
     19,
     0.5599999999999999,
     1
    ],
    [
     10,
     0.44000000000000006,
     0
    ],
    [
     12,
     0.44000000000000006,
     0
    ],
    [
     13,
     0.44000000000000006,
     0
    ],
    [
     15,
     0.44000000000000006,
     0
    ],
    [
     18,
     0.44000000000000006,
     0
    ]
   ]
  }
 ],
 "layout": {
  "method": "mds",
  "alignment_ref": null,
  "points": [
   [
    0.9937594271988458,
    0.33237719860571285,
    "Left",
    false
   ],
   [
    0.9937594271988472,
    0.33237719860571296,
    "Left",
    false
   ],
   [
    0.9937594271988464,
    0.33237719860571363,
    "Left",
    false
   ],
   [
    0.9937594271988466,
    0.3323771986057133,
    "Left",
    false
   ],
   [
    -0.7151165453241349,
    0.05697528603512407,
    "Right",
    false
   ],
   [
    -0.7151165453241349,
    0.05697528603512407,
    "Right",
    false
   ],
   [
    -0.7151165453241349,
    0.05697528603512413,
    "Right",
    false
   ],
   [
    -0.7151165453241349,
    0.05697528603512413,
    "Right",
    false
   ],
   [
    -0.715116545324135,
    0.05697528603512389,
    "Right",
    false
   ],
   [
    -0.7151165453241349,
    0.05697528603512405,
    "Right",
    false
   ],
   [
    0.5565522161181498,
    -0.5594263520107441,
    "Right",
    false
   ],
   [
    -0.06746829214382224,
    -0.16546150377081706,
    "Right",
    false
   ],
   [
    -0.06746829214382224,
    -0.1654615037708171,
    "Right",
    false
   ],
   [
    0.5565522161181498,
    -0.559426352010744,
    "Right",
    false
   ],
   [
    -0.715116545324135,
    0.0569752860351241,
    "Right",
    false
   ],
   [
    0.5565522161181498,
    -0.559426352010744,
    "Right",
    false
   ],
   [
    -0.715116545324135,
    0.05697528603512412,
    "Right",
    false
   ],
   [
    0.3697389189368742,
    0.7263420468456405,
    "Left",
    false
   ],
   [
    0.5565522161181498,
    -0.5594263520107438,
    "Right",
    false
   ],
   [
    -0.7151165453241352,
    0.05697528603512393,
    "Right",
    false
   ]
  ]
 }
} as const;

export const tests = {
 "class_names": [
  "neg",
  "pos"
 ],
 "rows": [
  {
   "index": 0,
   "gt": 0,
   "pred": 0,
   "target_pred": 0,
   "scores": [
    6.388115018299123,
    0.2676762708333128
   ],
   "margin": 6.12043874746581,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": -5.29945819539598,
     "percent": 86.58624673909596,
     "toward": 0
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": -0.8209805520698303,
     "percent": 13.413753260904054,
     "toward": 0
    }
   ]
  },
  {
   "index": 2,
   "gt": 0,
   "pred": 0,
   "target_pred": 0,
   "scores": [
    6.388115018299123,
    0.2676762708333128
   ],
   "margin": 6.12043874746581,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": -5.29945819539598,
     "percent": 86.58624673909596,
     "toward": 0
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": -0.8209805520698303,
     "percent": 13.413753260904054,
     "toward": 0
    }
   ]
  },
  {
   "index": 5,
   "gt": 0,
   "pred": 0,
   "target_pred": 0,
   "scores": [
    6.388115018299123,
    0.2676762708333128
   ],
   "margin": 6.12043874746581,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": -5.29945819539598,
     "percent": 86.58624673909596,
     "toward": 0
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": -0.8209805520698303,
     "percent": 13.413753260904054,
     "toward": 0
    }
   ]
  },
  {
   "index": 11,
   "gt": 1,
   "pred": 1,
   "target_pred": 1,
   "scores": [
    0.5539228934371365,
    6.1018683956953
   ],
   "margin": 5.547945502258163,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": 5.449427836009783,
     "percent": 98.2242495675511,
     "toward": 1
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": 0.09851766624837954,
     "percent": 1.7757504324489166,
     "toward": 1
    }
   ]
  },
  {
   "index": 16,
   "gt": 1,
   "pred": 1,
   "target_pred": 1,
   "scores": [
    0.5539228934371365,
    6.1018683956953
   ],
   "margin": 5.547945502258163,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": 5.449427836009783,
     "percent": 98.2242495675511,
     "toward": 1
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": 0.09851766624837954,
     "percent": 1.7757504324489166,
     "toward": 1
    }
   ]
  },
  {
   "index": 20,
   "gt": 1,
   "pred": 1,
   "target_pred": 0,
   "scores": [
    3.230685601770264,
    3.425105687362172
   ],
   "margin": 0.19442008559190782,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": 0.0959024193435285,
     "percent": 49.327423682360546,
     "toward": 1
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": 0.09851766624837954,
     "percent": 50.672576317639454,
     "toward": 1
    }
   ]
  }
 ]
} as const;

export const override = {
 "impact": {
  "stump_index": 0,
  "old_threshold": 0.56,
  "new_threshold": 0.76,
  "moved_samples": [
   {
    "index": 4,
    "old_side": "Right",
    "new_side": "Left"
   },
   {
    "index": 8,
    "old_side": "Right",
    "new_side": "Left"
   },
   {
    "index": 14,
    "old_side": "Right",
    "new_side": "Left"
   },
   {
    "index": 16,
    "old_side": "Right",
    "new_side": "Left"
   },
   {
    "index": 19,
    "old_side": "Right",
    "new_side": "Left"
   }
  ],
  "fidelity_before": 0.95,
  "fidelity_after": 0.9,
  "gini_before": 0.09090909090909097,
  "gini_after": 0.375,
  "stump": {
   "feature": 0,
   "threshold": 0.76,
   "p_left": [
    0.625,
    0.375
   ],
   "p_right": [
    0.0,
    1.0
   ],
   "weight": 2.9444389791664403,
   "counts": {
    "left": [
     10,
     6
    ],
    "right": [
     0,
     4
    ]
   },
   "degenerate": false,
   "feature_name": "size"
  }
 },
 "fidelity": {
  "1": 0.9,
  "2": 0.9,
  "3": 0.9,
  "4": 0.9,
  "full": 0.9
 },
 "edit_count": 1,
 "layout": {
  "method": "mds",
  "alignment_ref": "procrustes",
  "points": [
   [
    0.9268778821380649,
    0.31314003849750965,
    "Left",
    false
   ],
   [
    0.9268778821380662,
    0.31314003849751015,
    "Left",
    false
   ],
   [
    0.9268778821380658,
    0.3131400384975094,
    "Left",
    false
   ],
   [
    0.9268778821380659,
    0.31314003849751,
    "Left",
    false
   ],
   [
    -0.3416451848498616,
    -0.2854035064491342,
    "Left",
    true
   ],
   [
    -0.7639997090528171,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    -0.763999709052817,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    -0.763999709052817,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    -0.34164518484986167,
    -0.2854035064491341,
    "Left",
    true
   ],
   [
    -0.763999709052817,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    0.38492363477327796,
    -0.3605418012782471,
    "Left",
    false
   ],
   [
    -0.34164518484986167,
    -0.28540350644913404,
    "Left",
    false
   ],
   [
    -0.3416451848498618,
    -0.2854035064491341,
    "Left",
    false
   ],
   [
    0.38492363477327796,
    -0.36054180127824714,
    "Left",
    false
   ],
   [
    -0.3416451848498618,
    -0.2854035064491341,
    "Left",
    true
   ],
   [
    0.38492363477327796,
    -0.3605418012782471,
    "Left",
    false
   ],
   [
    -0.3416451848498618,
    -0.285403506449134,
    "Left",
    true
   ],
   [
    0.200309062514926,
    0.38827833332662287,
    "Left",
    false
   ],
   [
    0.3849236347732779,
    -0.36054180127824687,
    "Left",
    false
   ],
   [
    -0.34164518484986184,
    -0.28540350644913387,
    "Left",
    true
   ]
  ]
 },
 "trajectories": [
  {
   "index": 0,
   "start": [
    0.9937594271988458,
    0.33237719860571285
   ],
   "end": [
    0.9268778821380649,
    0.31314003849750965
   ],
   "changed": false
  },
  {
   "index": 1,
   "start": [
    0.9937594271988472,
    0.33237719860571296
   ],
   "end": [
    0.9268778821380662,
    0.31314003849751015
   ],
   "changed": false
  },
  {
   "index": 2,
   "start": [
    0.9937594271988464,
    0.33237719860571363
   ],
   "end": [
    0.9268778821380658,
    0.3131400384975094
   ],
   "changed": false
  },
  {
   "index": 3,
   "start": [
    0.9937594271988466,
    0.3323771986057133
   ],
   "end": [
    0.9268778821380659,
    0.31314003849751
   ],
   "changed": false
  },
  {
   "index": 4,
   "start": [
    -0.7151165453241349,
    0.05697528603512407
   ],
   "end": [
    -0.3416451848498616,
    -0.2854035064491342
   ],
   "changed": true
  },
  {
   "index": 5,
   "start": [
    -0.7151165453241349,
    0.05697528603512407
   ],
   "end": [
    -0.7639997090528171,
    0.44978831573506606
   ],
   "changed": false
  },
  {
   "index": 6,
   "start": [
    -0.7151165453241349,
    0.05697528603512413
   ],
   "end": [
    -0.763999709052817,
    0.44978831573506606
   ],
   "changed": false
  },
  {
   "index": 7,
   "start": [
    -0.7151165453241349,
    0.05697528603512413
   ],
   "end": [
    -0.763999709052817,
    0.44978831573506606
   ],
   "changed": false
  },
  {
   "index": 8,
   "start": [
    -0.715116545324135,
    0.05697528603512389
   ],
   "end": [
    -0.34164518484986167,
    -0.2854035064491341
   ],
   "changed": true
  },
  {
   "index": 9,
   "start": [
    -0.7151165453241349,
    0.05697528603512405
   ],
   "end": [
    -0.763999709052817,
    0.44978831573506606
   ],
   "changed": false
  },
  {
   "index": 10,
   "start": [
    0.5565522161181498,
    -0.5594263520107441
   ],
   "end": [
    0.38492363477327796,
    -0.3605418012782471
   ],
   "changed": false
  },
  {
   "index": 11,
   "start": [
    -0.06746829214382224,
    -0.16546150377081706
   ],
   "end": [
    -0.34164518484986167,
    -0.28540350644913404
   ],
   "changed": false
  },
  {
   "index": 12,
   "start": [
    -0.06746829214382224,
    -0.1654615037708171
   ],
   "end": [
    -0.3416451848498618,
    -0.2854035064491341
   ],
   "changed": false
  },
  {
   "index": 13,
   "start": [
    0.5565522161181498,
    -0.559426352010744
   ],
   "end": [
    0.38492363477327796,
    -0.36054180127824714
   ],
   "changed": false
  },
  {
   "index": 14,
   "start": [
    -0.715116545324135,
    0.0569752860351241
   ],
   "end": [
    -0.3416451848498618,
    -0.2854035064491341
   ],
   "changed": true
  },
  {
   "index": 15,
   "start": [
    0.5565522161181498,
    -0.559426352010744
   ],
   "end": [
    0.38492363477327796,
    -0.3605418012782471
   ],
   "changed": false
  },
  {
   "index": 16,
   "start": [
    -0.715116545324135,
    0.05697528603512412
   ],
   "end": [
    -0.3416451848498618,
    -0.285403506449134
   ],
   "changed": true
  },
  {
   "index": 17,
   "start": [
    0.3697389189368742,
    0.7263420468456405
   ],
   "end": [
    0.200309062514926,
    0.38827833332662287
   ],
   "changed": false
  },
  {
   "index": 18,
   "start": [
    0.5565522161181498,
    -0.5594263520107438
   ],
   "end": [
    0.3849236347732779,
    -0.36054180127824687
   ],
   "changed": false
  },
  {
   "index": 19,
   "start": [
    -0.7151165453241352,
    0.05697528603512393
   ],
   "end": [
    -0.34164518484986184,
    -0.28540350644913387
   ],
   "changed": true
  }
 ]
} as const;

export const summaryAfter = {
 "session_id": "sess-fixture",
 "complexity_index": 3,
 "n_estimators": 3,
 "precision": 2,
 "edit_count": 1,
 "fidelity": {
  "1": 0.9,
  "2": 0.9,
  "3": 0.9,
  "4": 0.9,
  "full": 0.9
 },
 "stumps": [
  {
   "feature": 0,
   "threshold": 0.76,
   "p_left": [
    0.625,
    0.375
   ],
   "p_right": [
    0.0,
    1.0
   ],
   "weight": 2.9444389791664403,
   "counts": {
    "left": [
     10,
     6
    ],
    "right": [
     0,
     4
    ]
   },
   "degenerate": false,
   "feature_name": "size",
   "gini": 0.375,
   "performance": 1.8402743619790252
  },
  {
   "feature": 0,
   "threshold": 0.44,
   "p_left": [
    1.0,
    0.0
   ],
   "p_right": [
    0.0666666666666667,
    0.9333333333333333
   ],
   "weight": 2.890371757896165,
   "counts": {
    "left": [
     8,
     0
    ],
    "right": [
     2,
     10
    ]
   },
   "degenerate": false,
   "feature_name": "size",
   "gini": 0.1666666666666666,
   "performance": 2.5242580018959844
  },
  {
   "feature": 1,
   "threshold": 0.31,
   "p_left": [
    1.0,
    0.0
   ],
   "p_right": [
    0.44000000000000006,
    0.5599999999999999
   ],
   "weight": 0.8209805520698303,
   "counts": {
    "left": [
     5,
     0
    ],
    "right": [
     5,
     10
    ]
   },
   "degenerate": false,
   "feature_name": "grade",
   "gini": 0.3333333333333333,
   "performance": 0.5254275533246914
  }
 ],
 "feature_importance": [
  {
   "feature": 0,
   "feature_name": "size",
   "score": 4.36453236387501
  },
  {
   "feature": 1,
   "feature_name": "grade",
   "score": 0.5254275533246914
  }
 ],
 "stump_ranking": [
  0,
  2,
  1
 ],
 "default_stump": 0,
 "feature_summaries": [
  {
   "feature": 0,
   "feature_name": "size",
   "importance": 4.36453236387501,
   "boundaries": [
    0.44,
    0.76
   ],
   "segments": [
    {
     "lo": 0.0,
     "hi": 0.44,
     "top_class": 0,
     "top_value": 4.73064611987519,
     "bottom_value": -1.104164617187415
    },
    {
     "lo": 0.44,
     "hi": 0.76,
     "top_class": 1,
     "top_value": 3.8018449245571695,
     "bottom_value": -2.032965812505436
    },
    {
     "lo": 0.76,
     "hi": 1.0,
     "top_class": 1,
     "top_value": 5.642119286536195,
     "bottom_value": -0.19269145052641107
    }
   ],
   "histogram": [
    {
     "lo": 0.0,
     "hi": 0.05,
     "counts": [
      1,
      0
     ]
    },
    {
     "lo": 0.05,
     "hi": 0.1,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.1,
     "hi": 0.15,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.15,
     "hi": 0.2,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.2,
     "hi": 0.25,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.25,
     "hi": 0.3,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.3,
     "hi": 0.35,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.35,
     "hi": 0.4,
     "counts": [
      3,
      0
     ]
    },
    {
     "lo": 0.4,
     "hi": 0.45,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.45,
     "hi": 0.5,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.5,
     "hi": 0.55,
     "counts": [
      2,
      1
     ]
    },
    {
     "lo": 0.55,
     "hi": 0.6,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.6,
     "hi": 0.65,
     "counts": [
      0,
      3
     ]
    },
    {
     "lo": 0.65,
     "hi": 0.7,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.7,
     "hi": 0.75,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.75,
     "hi": 0.8,
     "counts": [
      0,
      2
     ]
    },
    {
     "lo": 0.8,
     "hi": 0.85,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.85,
     "hi": 0.9,
     "counts": [
      0,
      2
     ]
    },
    {
     "lo": 0.9,
     "hi": 0.95,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.95,
     "hi": 1.0,
     "counts": [
      0,
      2
     ]
    }
   ]
  },
  {
   "feature": 1,
   "feature_name": "grade",
   "importance": 0.5254275533246914,
   "boundaries": [
    0.31
   ],
   "segments": [
    {
     "lo": 0.0,
     "hi": 0.31,
     "top_class": 0,
     "top_value": 0.8209805520698303,
     "bottom_value": -0.0
    },
    {
     "lo": 0.31,
     "hi": 1.0,
     "top_class": 1,
     "top_value": 0.45974910915910494,
     "bottom_value": -0.3612314429107254
    }
   ],
   "histogram": [
    {
     "lo": 0.0,
     "hi": 0.05,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.05,
     "hi": 0.1,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.1,
     "hi": 0.15,
     "counts": [
      2,
      0
     ]
    },
    {
     "lo": 0.15,
     "hi": 0.2,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.2,
     "hi": 0.25,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.25,
     "hi": 0.3,
     "counts": [
      1,
      0
     ]
    },
    {
     "lo": 0.3,
     "hi": 0.35,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.35,
     "hi": 0.4,
     "counts": [
      1,
      2
     ]
    },
    {
     "lo": 0.4,
     "hi": 0.45,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.45,
     "hi": 0.5,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.5,
     "hi": 0.55,
     "counts": [
      2,
      1
     ]
    },
    {
     "lo": 0.55,
     "hi": 0.6,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.6,
     "hi": 0.65,
     "counts": [
      2,
      1
     ]
    },
    {
     "lo": 0.65,
     "hi": 0.7,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.7,
     "hi": 0.75,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.75,
     "hi": 0.8,
     "counts": [
      0,
      1
     ]
    },
    {
     "lo": 0.8,
     "hi": 0.85,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.85,
     "hi": 0.9,
     "counts": [
      0,
      3
     ]
    },
    {
     "lo": 0.9,
     "hi": 0.95,
     "counts": [
      0,
      0
     ]
    },
    {
     "lo": 0.95,
     "hi": 1.0,
     "counts": [
      0,
      2
     ]
    }
   ]
  }
 ],
 "sample_grids": [
  {
   "stump_index": 0,
   "left": [
    [
     0,
     0.625,
     0
    ],
    [
     1,
     0.625,
     0
    ],
    [
     2,
     0.625,
     0
    ],
    [
     3,
     0.625,
     0
    ],
    [
     10,
     0.625,
     0
    ],
    [
     12,
     0.625,
     0
    ],
    [
     13,
     0.625,
     0
    ],
    [
     15,
     0.625,
     0
    ],
    [
     17,
     0.625,
     0
    ],
    [
     18,
     0.625,
     0
    ],
    [
     4,
     0.375,
     1
    ],
    [
     8,
     0.375,
     1
    ],
    [
     11,
     0.375,
     1
    ],
    [
     14,
     0.375,
     1
    ],
    [
     16,
     0.375,
     1
    ],
    [
     19,
     0.375,
     1
    ]
   ],
   "right": [
    [
     5,
     1.0,
     1
    ],
    [
     6,
     1.0,
     1
    ],
    [
     7,
     1.0,
     1
    ],
    [
     9,
     1.0,
     1
    ]
   ]
  },
  {
   "stump_index": 1,
   "left": [
    [
     0,
     1.0,
     0
    ],
    [
     1,
     1.0,
     0
    ],
    [
     2,
     1.0,
     0
    ],
    [
     3,
     1.0,
     0
    ],
    [
     10,
     1.0,
     0
    ],
    [
     13,
     1.0,
     0
    ],
    [
     15,
     1.0,
     0
    ],
    [
     18,
     1.0,
     0
    ]
   ],
   "right": [
    [
     4,
     0.9333333333333333,
     1
    ],
    [
     5,
     0.9333333333333333,
     1
    ],
    [
     6,
     0.9333333333333333,
     1
    ],
    [
     7,
     0.9333333333333333,
     1
    ],
    [
     8,
     0.9333333333333333,
     1
    ],
    [
     9,
     0.9333333333333333,
     1
    ],
    [
     11,
     0.9333333333333333,
     1
    ],
    [
     14,
     0.9333333333333333,
     1
    ],
    [
     16,
     0.9333333333333333,
     1
    ],
    [
     19,
     0.9333333333333333,
     1
    ],
    [
     12,
     0.0666666666666667,
     0
    ],
    [
     17,
     0.0666666666666667,
     0
    ]
   ]
  },
  {
   "stump_index": 2,
   "left": [
    [
     0,
     1.0,
     0
    ],
    [
     1,
     1.0,
     0
    ],
    [
     2,
     1.0,
     0
    ],
    [
     3,
     1.0,
     0
    ],
    [
     17,
     1.0,
     0
    ]
   ],
   "right": [
    [
     4,
     0.5599999999999999,
     1
    ],
    [
     5,
     0.5599999999999999,
     1
    ],
    [
     6,
     0.5599999999999999,
     1
    ],
    [
     7,
     0.5599999999999999,
     1
    ],
    [
     8,
     0.5599999999999999,
     1
    ],
    [
     9,
     0.5599999999999999,
     1
    ],
    [
     11,
     0.5599999999999999,
     1
    ],
    [
     14,
     0.5599999999999999,
     1
    ],
    [
     16,
     0.5599999999999999,
     1
    ],
    [
     19,
     0.5599999999999999,
     1
    ],
    [
     10,
     0.44000000000000006,
     0
    ],
    [
     12,
     0.44000000000000006,
     0
    ],
    [
     13,
     0.44000000000000006,
     0
    ],
    [
     15,
     0.44000000000000006,
     0
    ],
    [
     18,
     0.44000000000000006,
     0
    ]
   ]
  }
 ],
 "layout": {
  "method": "mds",
  "alignment_ref": "procrustes",
  "points": [
   [
    0.9268778821380649,
    0.31314003849750965,
    "Left",
    false
   ],
   [
    0.9268778821380662,
    0.31314003849751015,
    "Left",
    false
   ],
   [
    0.9268778821380658,
    0.3131400384975094,
    "Left",
    false
   ],
   [
    0.9268778821380659,
    0.31314003849751,
    "Left",
    false
   ],
   [
    -0.3416451848498616,
    -0.2854035064491342,
    "Left",
    false
   ],
   [
    -0.7639997090528171,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    -0.763999709052817,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    -0.763999709052817,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    -0.34164518484986167,
    -0.2854035064491341,
    "Left",
    false
   ],
   [
    -0.763999709052817,
    0.44978831573506606,
    "Right",
    false
   ],
   [
    0.38492363477327796,
    -0.3605418012782471,
    "Left",
    false
   ],
   [
    -0.34164518484986167,
    -0.28540350644913404,
    "Left",
    false
   ],
   [
    -0.3416451848498618,
    -0.2854035064491341,
    "Left",
    false
   ],
   [
    0.38492363477327796,
    -0.36054180127824714,
    "Left",
    false
   ],
   [
    -0.3416451848498618,
    -0.2854035064491341,
    "Left",
    false
   ],
   [
    0.38492363477327796,
    -0.3605418012782471,
    "Left",
    false
   ],
   [
    -0.3416451848498618,
    -0.285403506449134,
    "Left",
    false
   ],
   [
    0.200309062514926,
    0.38827833332662287,
    "Left",
    false
   ],
   [
    0.3849236347732779,
    -0.36054180127824687,
    "Left",
    false
   ],
   [
    -0.34164518484986184,
    -0.28540350644913387,
    "Left",
    false
   ]
  ]
 }
} as const;

export const testsAfter = {
 "class_names": [
  "neg",
  "pos"
 ],
 "rows": [
  {
   "index": 0,
   "gt": 0,
   "pred": 0,
   "target_pred": 0,
   "scores": [
    5.55162667194502,
    1.104164617187415
   ],
   "margin": 4.447462054757605,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": -3.626481502687775,
     "percent": 81.54047090313904,
     "toward": 0
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": -0.8209805520698303,
     "percent": 18.459529096860958,
     "toward": 0
    }
   ]
  },
  {
   "index": 2,
   "gt": 0,
   "pred": 0,
   "target_pred": 0,
   "scores": [
    5.55162667194502,
    1.104164617187415
   ],
   "margin": 4.447462054757605,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": -3.626481502687775,
     "percent": 81.54047090313904,
     "toward": 0
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": -0.8209805520698303,
     "percent": 18.459529096860958,
     "toward": 0
    }
   ]
  },
  {
   "index": 5,
   "gt": 0,
   "pred": 0,
   "target_pred": 0,
   "scores": [
    5.55162667194502,
    1.104164617187415
   ],
   "margin": 4.447462054757605,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": -3.626481502687775,
     "percent": 81.54047090313904,
     "toward": 0
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": -0.8209805520698303,
     "percent": 18.459529096860958,
     "toward": 0
    }
   ]
  },
  {
   "index": 11,
   "gt": 1,
   "pred": 1,
   "target_pred": 1,
   "scores": [
    2.3941972554161617,
    4.261594033716275
   ],
   "margin": 1.867396778300113,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": 1.7688791120517329,
     "percent": 94.7243313583276,
     "toward": 1
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": 0.09851766624837954,
     "percent": 5.275668641672391,
     "toward": 1
    }
   ]
  },
  {
   "index": 16,
   "gt": 1,
   "pred": 1,
   "target_pred": 1,
   "scores": [
    2.3941972554161617,
    4.261594033716275
   ],
   "margin": 1.867396778300113,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": 1.7688791120517329,
     "percent": 94.7243313583276,
     "toward": 1
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": 0.09851766624837954,
     "percent": 5.275668641672391,
     "toward": 1
    }
   ]
  },
  {
   "index": 20,
   "gt": 1,
   "pred": 1,
   "target_pred": 0,
   "scores": [
    2.3941972554161617,
    4.261594033716275
   ],
   "margin": 1.867396778300113,
   "contributions": [
    {
     "feature": 0,
     "feature_name": "size",
     "value": 1.7688791120517329,
     "percent": 94.7243313583276,
     "toward": 1
    },
    {
     "feature": 1,
     "feature_name": "grade",
     "value": 0.09851766624837954,
     "percent": 5.275668641672391,
     "toward": 1
    }
   ]
  }
 ]
} as const;

export const undo = {
 "impact": {
  "stump_index": 0,
  "old_threshold": 0.76,
  "new_threshold": 0.56,
  "moved_samples": [
   {
    "index": 4,
    "old_side": "Left",
    "new_side": "Right"
   },
   {
    "index": 8,
    "old_side": "Left",
    "new_side": "Right"
   },
   {
    "index": 14,
    "old_side": "Left",
    "new_side": "Right"
   },
   {
    "index": 16,
    "old_side": "Left",
    "new_side": "Right"
   },
   {
    "index": 19,
    "old_side": "Left",
    "new_side": "Right"
   }
  ],
  "fidelity_before": 0.9,
  "fidelity_after": 0.95,
  "gini_before": 0.375,
  "gini_after": 0.09090909090909097,
  "stump": {
   "feature": 0,
   "threshold": 0.56,
   "p_left": [
    0.9090909090909091,
    0.09090909090909093
   ],
   "p_right": [
    0.0,
    1.0
   ],
   "weight": 2.9444389791664403,
   "counts": {
    "left": [
     10,
     1
    ],
    "right": [
     0,
     9
    ]
   },
   "degenerate": false,
   "feature_name": "size"
  }
 },
 "fidelity": {
  "1": 0.95,
  "2": 0.95,
  "3": 0.95,
  "4": 0.95,
  "full": 0.95
 },
 "edit_count": 0,
 "layout": {
  "method": "mds",
  "alignment_ref": "procrustes",
  "points": [
   [
    0.993759427198846,
    0.33237719860571296,
    "Left",
    false
   ],
   [
    0.9937594271988475,
    0.3323771986057131,
    "Left",
    false
   ],
   [
    0.9937594271988466,
    0.33237719860571374,
    "Left",
    false
   ],
   [
    0.9937594271988468,
    0.3323771986057134,
    "Left",
    false
   ],
   [
    -0.715116545324135,
    0.05697528603512413,
    "Right",
    true
   ],
   [
    -0.715116545324135,
    0.05697528603512413,
    "Right",
    false
   ],
   [
    -0.715116545324135,
    0.056975286035124195,
    "Right",
    false
   ],
   [
    -0.715116545324135,
    0.056975286035124195,
    "Right",
    false
   ],
   [
    -0.7151165453241352,
    0.05697528603512395,
    "Right",
    true
   ],
   [
    -0.715116545324135,
    0.05697528603512411,
    "Right",
    false
   ],
   [
    0.5565522161181499,
    -0.5594263520107444,
    "Left",
    false
   ],
   [
    -0.06746829214382227,
    -0.16546150377081714,
    "Left",
    false
   ],
   [
    -0.06746829214382227,
    -0.16546150377081717,
    "Left",
    false
   ],
   [
    0.5565522161181499,
    -0.5594263520107443,
    "Left",
    false
   ],
   [
    -0.7151165453241352,
    0.05697528603512416,
    "Right",
    true
   ],
   [
    0.5565522161181499,
    -0.5594263520107443,
    "Left",
    false
   ],
   [
    -0.7151165453241352,
    0.05697528603512418,
    "Right",
    true
   ],
   [
    0.36973891893687433,
    0.7263420468456409,
    "Left",
    false
   ],
   [
    0.5565522161181499,
    -0.5594263520107441,
    "Left",
    false
   ],
   [
    -0.7151165453241353,
    0.056975286035123994,
    "Right",
    true
   ]
  ]
 },
 "trajectories": [
  {
   "index": 0,
   "start": [
    0.9268778821380649,
    0.31314003849750965
   ],
   "end": [
    0.993759427198846,
    0.33237719860571296
   ],
   "changed": false
  },
  {
   "index": 1,
   "start": [
    0.9268778821380662,
    0.31314003849751015
   ],
   "end": [
    0.9937594271988475,
    0.3323771986057131
   ],
   "changed": false
  },
  {
   "index": 2,
   "start": [
    0.9268778821380658,
    0.3131400384975094
   ],
   "end": [
    0.9937594271988466,
    0.33237719860571374
   ],
   "changed": false
  },
  {
   "index": 3,
   "start": [
    0.9268778821380659,
    0.31314003849751
   ],
   "end": [
    0.9937594271988468,
    0.3323771986057134
   ],
   "changed": false
  },
  {
   "index": 4,
   "start": [
    -0.3416451848498616,
    -0.2854035064491342
   ],
   "end": [
    -0.715116545324135,
    0.05697528603512413
   ],
   "changed": true
  },
  {
   "index": 5,
   "start": [
    -0.7639997090528171,
    0.44978831573506606
   ],
   "end": [
    -0.715116545324135,
    0.05697528603512413
   ],
   "changed": false
  },
  {
   "index": 6,
   "start": [
    -0.763999709052817,
    0.44978831573506606
   ],
   "end": [
    -0.715116545324135,
    0.056975286035124195
   ],
   "changed": false
  },
  {
   "index": 7,
   "start": [
    -0.763999709052817,
    0.44978831573506606
   ],
   "end": [
    -0.715116545324135,
    0.056975286035124195
   ],
   "changed": false
  },
  {
   "index": 8,
   "start": [
    -0.34164518484986167,
    -0.2854035064491341
   ],
   "end": [
    -0.7151165453241352,
    0.05697528603512395
   ],
   "changed": true
  },
  {
   "index": 9,
   "start": [
    -0.763999709052817,
    0.44978831573506606
   ],
   "end": [
    -0.715116545324135,
    0.05697528603512411
   ],
   "changed": false
  },
  {
   "index": 10,
   "start": [
    0.38492363477327796,
    -0.3605418012782471
   ],
   "end": [
    0.5565522161181499,
    -0.5594263520107444
   ],
   "changed": false
  },
  {
   "index": 11,
   "start": [
    -0.34164518484986167,
    -0.28540350644913404
   ],
   "end": [
    -0.06746829214382227,
    -0.16546150377081714
   ],
   "changed": false
  },
  {
   "index": 12,
   "start": [
    -0.3416451848498618,
    -0.2854035064491341
   ],
   "end": [
    -0.06746829214382227,
    -0.16546150377081717
   ],
   "changed": false
  },
  {
   "index": 13,
   "start": [
    0.38492363477327796,
    -0.36054180127824714
   ],
   "end": [
    0.5565522161181499,
    -0.5594263520107443
   ],
   "changed": false
  },
  {
   "index": 14,
   "start": [
    -0.3416451848498618,
    -0.2854035064491341
   ],
   "end": [
    -0.7151165453241352,
    0.05697528603512416
   ],
   "changed": true
  },
  {
   "index": 15,
   "start": [
    0.38492363477327796,
    -0.3605418012782471
   ],
   "end": [
    0.5565522161181499,
    -0.5594263520107443
   ],
   "changed": false
  },
  {
   "index": 16,
   "start": [
    -0.3416451848498618,
    -0.285403506449134
   ],
   "end": [
    -0.7151165453241352,
    0.05697528603512418
   ],
   "changed": true
  },
  {
   "index": 17,
   "start": [
    0.200309062514926,
    0.38827833332662287
   ],
   "end": [
    0.36973891893687433,
    0.7263420468456409
   ],
   "changed": false
  },
  {
   "index": 18,
   "start": [
    0.3849236347732779,
    -0.36054180127824687
   ],
   "end": [
    0.5565522161181499,
    -0.5594263520107441
   ],
   "changed": false
  },
  {
   "index": 19,
   "start": [
    -0.34164518484986184,
    -0.28540350644913387
   ],
   "end": [
    -0.7151165453241353,
    0.056975286035123994
   ],
   "changed": true
  }
 ]
} as const;

export const flip = {
 "test_index": 20,
 "stump": 1,
 "feature": 0,
 "feature_name": "size",
 "feature_value": 0.5,
 "current_threshold": 0.44,
 "flip_threshold": 0.5625
} as const;

export const exportDoc = {
 "schema": "stumplab.session/1",
 "session_id": "sess-fixture",
 "precision": 2,
 "complexity_index": 3,
 "base_model": {
  "complexity_index": 3,
  "n_estimators": 3,
  "precision": 2,
  "stumps": [
   {
    "feature": 0,
    "threshold": 0.56,
    "p_left": [
     0.9090909090909091,
     0.09090909090909093
    ],
    "p_right": [
     0.0,
     1.0
    ],
    "weight": 2.9444389791664403,
    "counts": {
     "left": [
      10,
      1
     ],
     "right": [
      0,
      9
     ]
    },
    "degenerate": false
   },
   {
    "feature": 0,
    "threshold": 0.44,
    "p_left": [
     1.0,
     0.0
    ],
    "p_right": [
     0.0666666666666667,
     0.9333333333333333
    ],
    "weight": 2.890371757896165,
    "counts": {
     "left": [
      8,
      0
     ],
     "right": [
      2,
      10
     ]
    },
    "degenerate": false
   },
   {
    "feature": 1,
    "threshold": 0.31,
    "p_left": [
     1.0,
     0.0
    ],
    "p_right": [
     0.44000000000000006,
     0.5599999999999999
    ],
    "weight": 0.8209805520698303,
    "counts": {
     "left": [
      5,
      0
     ],
     "right": [
      5,
      10
     ]
    },
    "degenerate": false
   }
  ]
 },
 "working_model": {
  "complexity_index": 3,
  "n_estimators": 3,
  "precision": 2,
  "stumps": [
   {
    "feature": 0,
    "threshold": 0.56,
    "p_left": [
     0.9090909090909091,
     0.09090909090909093
    ],
    "p_right": [
     0.0,
     1.0
    ],
    "weight": 2.9444389791664403,
    "counts": {
     "left": [
      10,
      1
     ],
     "right": [
      0,
      9
     ]
    },
    "degenerate": false
   },
   {
    "feature": 0,
    "threshold": 0.44,
    "p_left": [
     1.0,
     0.0
    ],
    "p_right": [
     0.0666666666666667,
     0.9333333333333333
    ],
    "weight": 2.890371757896165,
    "counts": {
     "left": [
      8,
      0
     ],
     "right": [
      2,
      10
     ]
    },
    "degenerate": false
   },
   {
    "feature": 1,
    "threshold": 0.31,
    "p_left": [
     1.0,
     0.0
    ],
    "p_right": [
     0.44000000000000006,
     0.5599999999999999
    ],
    "weight": 0.8209805520698303,
    "counts": {
     "left": [
      5,
      0
     ],
     "right": [
      5,
      10
     ]
    },
    "degenerate": false
   }
  ]
 },
 "edit_log": [],
 "fidelity": {
  "1": 0.95,
  "2": 0.95,
  "3": 0.95,
  "4": 0.95,
  "full": 0.95
 }
} as const;

