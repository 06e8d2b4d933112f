from django.urls import path
from .views import (
    HomeView,
    FixtureListView,
    FixtureDetailView,
    BracketView,
    ClosureView,
    GeometricRankView,
    TypeView,
)

app_name = 'algebra'

urlpatterns = [
    path('', HomeView.as_view(), name='home'),
    # Catalog
    path('fixtures/', FixtureListView.as_view(), name='fixtures'),
    path('fixtures/<str:name>/', FixtureDetailView.as_view(), name='fixture_detail'),
    # Computations
    path('bracket/', BracketView.as_view(), name='bracket'),
    path('closure/', ClosureView.as_view(), name='closure'),
    path('georank/', GeometricRankView.as_view(), name='georank'),
    path('type/', TypeView.as_view(), name='type'),
]
