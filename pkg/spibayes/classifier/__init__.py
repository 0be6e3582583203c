from spibayes.classifier.naive_bayes import (GaussianParams, NaiveBayesModel,  # noqa:F401
                                             Posterior, classify, classify_batch, fit,
                                             gaussian_log_pdf, load_model, save_model)
