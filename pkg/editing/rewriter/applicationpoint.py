from abc import ABC


ApplicationPoint = type('ApplicationPoint', (ABC,), {})  # each `Rewriter` defines what an `ApplicationPoint` is for it
