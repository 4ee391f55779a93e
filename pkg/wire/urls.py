from django.urls import path

from .views import FrameView

app_name = 'wire'

urlpatterns = [
    path('frames/', FrameView.as_view(), name='frames'),
]
