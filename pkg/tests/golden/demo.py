import tkinter as tk
from tkinter import ttk

self = tk.Tk()
self.title("Demo App")
self.geometry("400x300")
self.configure(background="#f0f0f0")
self.resizable(True, True)

def on_run():
    pass

def on_submit(event=None):
    pass

Menu1 = tk.Menu(self)
Menu1_Sub1 = tk.Menu(Menu1, tearoff=0)
Menu1_Sub1.add_command(label="Open")
Menu1_Sub1.add_command(label="Save")
Menu1_Sub1.add_separator()
Menu1_Sub1.add_command(label="Quit")
Menu1.add_cascade(label="File", menu=Menu1_Sub1)
Menu1_Sub2 = tk.Menu(Menu1, tearoff=0)
Menu1_Sub2.add_command(label="About")
Menu1.add_cascade(label="Help", menu=Menu1_Sub2)
self.config(menu=Menu1)

Button1 = tk.Button(self, height=32, text="Run", width=80, command=on_run)
Button1.place(x=20, y=26)
Entry1 = tk.Entry(self, background="#ffffff", height=24, width=200)
Entry1.place(x=20, y=70)
Label1 = tk.Label(self, height=24, text="Status:", width=80)
Label1.place(x=20, y=110)

Entry1.bind("<Return>", on_submit)

self.mainloop()
