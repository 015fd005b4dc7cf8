import tkinter as tk
from tkinter import ttk

self = tk.Tk()
self.title("w")
self.geometry("400x300")
self.configure(background="#f0f0f0")
self.resizable(True, True)

self.mainloop()
