"""Visual spam filtering: render, OCR, classify, stack.

Emails are rendered exactly as a reader would see them; the perceived
text (via template OCR) and the page image each feed a classifier, and a
stacking meta classifier fuses the verdicts. Includes an adversarial
corpus generator for hidden-text salting tricks and an evaluation
harness.
"""

from .eml import EmailDocument, parse_email
from .dom import DomNode, parse_html, raw_text, to_html
from .styles import Style, resolve_styles
from .render import (GlyphTrace, Raster, RenderConfig, layout, rasterize,
                     render_email, visible_text, write_pgm, write_ppm)
from .ocr import OcrConfig, OcrResult, binarize, match_glyph, ocr_text, segment
from .features import (FeatureVector, Vocab, BagOfWordsVectorizer,
                       build_vocab, featurize, tokenize)
from .textmodels import (AdaBoostStumps, CartTree, CosineKnn,
                         LogisticRegressionGD, MultinomialNaiveBayes,
                         PegasosSvm, Prediction, RandomForestPresence,
                         TextModel, fit_text_model, predict, predict_tokens,
                         train)
from .cnn import (ConvNetClassifier, HyperGrid, augment, cnn_backward,
                  cnn_forward, lr_epoch_grid, to_image_tensor)
from .stacking import (EmailFeatureCache, StackedSpamClassifier,
                       StackFeatures, oof_stack_features, stack_predict,
                       stack_train)
from .corpus import (CorpusSpec, LabeledCorpus, apply_trick, gen_corpus,
                     gen_email, load_corpus)
from .metrics import Metrics, Split, compute_metrics, split
from .harness import run_table1, run_table2, table1_csv, table2_csv
from .modelio import load_model, load_model_file, save_model, save_model_file

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
